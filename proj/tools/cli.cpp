#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>

#include "wpkit/observables.hpp"
#include "wpkit/quadrature.hpp"
#include "wpkit/rotation.hpp"
#include "wpkit/verify.hpp"
#include "wpkit/wavepacket.hpp"

namespace wpkit::cli {

using json = nlohmann::json;

std::vector<std::array<double, 2>> EllipseSpec::boundary(int n) const {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double c = std::cos(tilt);
  const double s = std::sin(tilt);
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / n;
    const double u = semiaxis_alpha * std::cos(phi);
    const double v = semiaxis_beta * std::sin(phi);
    pts.push_back({center_x + c * u - s * v, center_p + s * u + c * v});
  }
  return pts;
}

EllipseSpec phase_space_ellipse(const GaussianParams& params) {
  const double theta = optimal_theta(params).radians;
  const QuadForm2 diag = hamiltonian_matrix(params).rotated(theta);
  const auto [lo, hi] = h_eigenvalues(params);
  EllipseSpec e;
  e.center_x = params.a();
  e.center_p = params.eta();
  e.tilt = theta;
  e.semiaxis_alpha = std::sqrt(params.hbar() / (0.5 * diag.m11));
  e.semiaxis_beta = std::sqrt(params.hbar() / (0.5 * diag.m22));
  e.omega_eff = std::sqrt(hi / lo);
  return e;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

struct GlobalFlags {
  double a_re = 0.0;
  double a_im = 0.0;
  double b_re = 0.0;
  double b_im = 0.0;
  double hbar = 1.0;
  double a = 0.0;
  double eta = 0.0;
  double tol = kDefaultParamTol;
  bool pretty = false;

  GaussianParams params() const {
    return GaussianParams::validate({a_re, a_im}, {b_re, b_im}, hbar, a, eta, tol);
  }
};

void emit(std::ostream& out, const json& j, bool pretty) { out << j.dump(pretty ? 2 : -1) << '\n'; }

json params_json(const GaussianParams& p) {
  return {{"A", {p.A().real(), p.A().imag()}},
          {"B", {p.B().real(), p.B().imag()}},
          {"hbar", p.hbar()},
          {"a", p.a()},
          {"eta", p.eta()}};
}

int cmd_theta(const GlobalFlags& g, std::ostream& out) {
  const GaussianParams p = g.params();
  emit(out,
       {{"theta", optimal_theta(p).radians},
        {"im_ba", p.im_ba()},
        {"mod_a", std::abs(p.A())},
        {"mod_b", std::abs(p.B())}},
       g.pretty);
  return kOk;
}

int cmd_report(const GlobalFlags& g, int k, std::optional<double> theta_flag, std::ostream& out) {
  if (k < 0) throw std::invalid_argument("--k must be nonnegative");
  const GaussianParams p = g.params();
  const double theta = theta_flag.value_or(optimal_theta(p).radians);
  const UncertaintyReport rep = uncertainty_report(p, k, theta);
  const double floor = 0.5 * p.hbar() * (2.0 * k + 1.0);

  const WavePacket wp = excited_state(p, k);
  const QuadratureSpec spec = default_quadrature(p, k);
  const auto sd = [&](const LinearObservable& obs) {
    return std::sqrt(quadrature_expectation(wp, obs, spec).variance);
  };
  const double qx = sd(LinearObservable::position());
  const double qp = sd(LinearObservable::momentum());
  const double qa = sd(LinearObservable::alpha(theta));
  const double qb = sd(LinearObservable::beta(theta));

  emit(out,
       {{"params", params_json(p)},
        {"k", rep.k},
        {"hbar", rep.hbar},
        {"theta", rep.theta},
        {"delta_x", rep.delta_x},
        {"delta_p", rep.delta_p},
        {"delta_alpha", rep.delta_alpha},
        {"delta_beta", rep.delta_beta},
        {"product_xp", rep.product_xp},
        {"product_alphabeta", rep.product_alphabeta},
        {"residual_min", std::abs(rep.product_alphabeta - floor)},
        {"quadrature",
         {{"delta_x", qx},
          {"delta_p", qp},
          {"delta_alpha", qa},
          {"delta_beta", qb},
          {"product_xp", qx * qp},
          {"product_alphabeta", qa * qb}}}},
       g.pretty);
  return kOk;
}

int cmd_verify(std::optional<std::uint64_t> seed_flag, int trials, bool tamper, std::ostream& out,
               std::ostream& err) {
  if (trials < 1) throw std::invalid_argument("--trials must be positive");
  VerifyOptions opts;
  if (seed_flag) {
    opts.seed = *seed_flag;
  } else if (const char* env = std::getenv("WPKIT_SEED")) {
    opts.seed = std::stoull(env);
  }
  opts.trials = trials;
  opts.tamper = tamper;

  const auto results = run_verification(opts);
  out << "seed " << opts.seed << ", trials " << opts.trials << '\n';
  bool ok = true;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%s %-40s max_residual=%-10.3e tolerance=%.1e\n",
                  r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.max_residual, r.tolerance);
    out << line;
    if (!r.passed()) {
      err << "invariant failed: " << r.name << '\n';
      ok = false;
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_sample(const GlobalFlags& g, int k, std::optional<double> xmin, std::optional<double> xmax,
               int points, std::ostream& out) {
  if (k < 0) throw std::invalid_argument("--k must be nonnegative");
  if (points < 2) throw std::invalid_argument("--points must be at least 2");
  const GaussianParams p = g.params();
  const QuadratureSpec span = default_quadrature(p, k);
  const double lo = xmin.value_or(p.a() - span.half_width);
  const double hi = xmax.value_or(p.a() + span.half_width);
  if (!(hi > lo)) throw std::invalid_argument("--xmax must exceed --xmin");

  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  const auto vals = evaluate(excited_state(p, k), xs);

  out << "x,re,im,abs2\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(vals[i].real()) << ','
        << format_double(vals[i].imag()) << ',' << format_double(std::norm(vals[i])) << '\n';
  }
  return kOk;
}

int cmd_scan(const GlobalFlags& g, int points, std::ostream& out) {
  if (points < 2) throw std::invalid_argument("--points must be at least 2");
  const GaussianParams p = g.params();
  const double step = std::numbers::pi / points;

  out << "t,mod_a,mod_b,product,im_ba\n";
  double best = INFINITY;
  double argmin = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = i * step;
    const GaussianParams r = rotate_params(p, t);
    const double prod = std::abs(r.A()) * std::abs(r.B());
    out << format_double(t) << ',' << format_double(std::abs(r.A())) << ','
        << format_double(std::abs(r.B())) << ',' << format_double(prod) << ','
        << format_double(r.im_ba()) << '\n';
    if (prod < best) {
      best = prod;
      argmin = t;
    }
  }
  const ScanResult refined = scan_minimize(p, std::max(points, 1000));
  out << "# argmin=" << format_double(argmin) << " refined=" << format_double(refined.t_star)
      << " optimal_theta=" << format_double(optimal_theta(p).radians) << '\n';
  return kOk;
}

int cmd_ellipse(const GlobalFlags& g, std::ostream& out) {
  const GaussianParams p = g.params();
  const EllipseSpec e = phase_space_ellipse(p);
  json boundary = json::array();
  for (const auto& pt : e.boundary(64)) boundary.push_back({pt[0], pt[1]});
  const double product = e.semiaxis_alpha * e.semiaxis_beta;
  emit(out,
       {{"center", {e.center_x, e.center_p}},
        {"tilt", e.tilt},
        {"semiaxis_alpha", e.semiaxis_alpha},
        {"semiaxis_beta", e.semiaxis_beta},
        {"semi_major", std::max(e.semiaxis_alpha, e.semiaxis_beta)},
        {"semi_minor", std::min(e.semiaxis_alpha, e.semiaxis_beta)},
        {"semiaxis_product", product},
        {"area", std::numbers::pi * product},
        {"omega_eff", e.omega_eff},
        {"boundary", boundary}},
       g.pretty);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiclassical wave packet uncertainty toolkit", "wpkit"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--A-re", g.a_re, "Re(A)");
  app.add_option("--A-im", g.a_im, "Im(A)");
  app.add_option("--B-re", g.b_re, "Re(B)");
  app.add_option("--B-im", g.b_im, "Im(B)");
  app.add_option("--hbar", g.hbar, "semiclassical parameter");
  app.add_option("--a", g.a, "mean position");
  app.add_option("--eta", g.eta, "mean momentum");
  app.add_option("--tol", g.tol, "tolerance on Re(conj(A) B) = 1");
  app.add_flag("--json-pretty", g.pretty, "indent JSON output");

  auto* theta = app.add_subcommand("theta", "optimal rotation angle");
  auto* report = app.add_subcommand("report", "uncertainty report for phi_k");
  int report_k = 0;
  std::optional<double> report_theta;
  report->add_option("--k", report_k, "excitation index");
  report->add_option("--theta", report_theta, "rotation angle (default: optimal)");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::optional<std::uint64_t> seed;
  int trials = 100;
  bool tamper = false;
  verify->add_option("--seed", seed, "RNG seed (default: $WPKIT_SEED or built-in)");
  verify->add_option("--trials", trials, "random parameter sets per suite");
  verify->add_flag("--tamper", tamper, "inject an impossible tolerance");

  auto* sample = app.add_subcommand("sample", "sample phi_k on a grid as CSV");
  int sample_k = 0;
  std::optional<double> xmin, xmax;
  int sample_points = 1001;
  sample->add_option("--k", sample_k, "excitation index");
  sample->add_option("--xmin", xmin);
  sample->add_option("--xmax", xmax);
  sample->add_option("--points", sample_points);

  auto* scan = app.add_subcommand("scan", "scan |A(t)||B(t)| along the rotation flow as CSV");
  int scan_points = 1024;
  scan->add_option("--points", scan_points);

  auto* ellipse = app.add_subcommand("ellipse", "phase-space ellipse as JSON");

  for (auto* sub : {theta, report, verify, sample, scan, ellipse}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*theta) return cmd_theta(g, out);
    if (*report) return cmd_report(g, report_k, report_theta, out);
    if (*verify) return cmd_verify(seed, trials, tamper, out, err);
    if (*sample) return cmd_sample(g, sample_k, xmin, xmax, sample_points, out);
    if (*scan) return cmd_scan(g, scan_points, out);
    if (*ellipse) return cmd_ellipse(g, out);
  } catch (const ParamError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace wpkit::cli
