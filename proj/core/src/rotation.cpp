#include "wpkit/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpkit {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::pair<std::complex<double>, std::complex<double>> flow(const GaussianParams& p, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return {p.A() * c + kI * p.B() * s, kI * p.A() * s + p.B() * c};
}

}  // namespace

QuadForm2 QuadForm2::rotated(double t) const noexcept {
  const double c = std::cos(t);
  const double s = std::sin(t);
  QuadForm2 r;
  r.m11 = c * c * m11 + 2 * c * s * m12 + s * s * m22;
  r.m22 = s * s * m11 - 2 * c * s * m12 + c * c * m22;
  r.m12 = (c * c - s * s) * m12 - c * s * (m11 - m22);
  return r;
}

RotationAngle optimal_theta(const GaussianParams& params) {
  const double y = 2.0 * params.im_ba();
  const double x = std::norm(params.B()) - std::norm(params.A());
  if (y == 0.0 && x == 0.0) return {0.0};
  return {0.5 * std::atan2(y, x)};
}

GaussianParams rotate_params(const GaussianParams& params, double t) {
  const auto [A, B] = flow(params, t);
  return GaussianParams::validate(A, B, params.hbar(), params.a(), params.eta());
}

QuadForm2 hamiltonian_matrix(const GaussianParams& params) {
  return {std::norm(params.B()), params.im_ba(), std::norm(params.A())};
}

std::pair<double, double> h_eigenvalues(const GaussianParams& params) {
  const double a2 = std::norm(params.A());
  const double b2 = std::norm(params.B());
  const double im = params.im_ba();
  const double root = std::sqrt((a2 - b2) * (a2 - b2) + 4.0 * im * im);
  return {0.25 * ((a2 + b2) - root), 0.25 * ((a2 + b2) + root)};
}

RotationAngle diagonalizing_angle(const QuadForm2& m) {
  const double y = 2.0 * m.m12;
  const double x = m.m11 - m.m22;
  if (y == 0.0 && x == 0.0) return {0.0};
  return {0.5 * std::atan2(y, x)};
}

QuadForm2 h1_h2_classical_form(const GaussianParams& params) {
  // 2 x (hbar A A*) matrix: [[|B|^2, -i B conj A], [i A conj B, |A|^2]].
  // The form (x p) M (x p)^T only sees (M + M^T) / 2.
  const std::complex<double> off12 = -kI * params.B() * std::conj(params.A());
  const std::complex<double> off21 = kI * params.A() * std::conj(params.B());
  const std::complex<double> sym = 0.5 * (off12 + off21);
  return {std::norm(params.B()), sym.real(), std::norm(params.A())};
}

QuadForm2 h2_classical_form(const GaussianParams& params) {
  const std::complex<double> off12 = kI * params.A() * std::conj(params.B());
  const std::complex<double> off21 = -kI * params.B() * std::conj(params.A());
  const std::complex<double> sym = 0.5 * (off12 + off21);
  return {std::norm(params.B()), sym.real(), std::norm(params.A())};
}

double flow_product(const GaussianParams& params, double t) {
  const auto [A, B] = flow(params, t);
  return std::abs(A) * std::abs(B);
}

double flow_im_ba(const GaussianParams& params, double t) {
  const auto [A, B] = flow(params, t);
  return (B * std::conj(A)).imag();
}

double flow_f(const GaussianParams& params, double t) {
  const auto [A, B] = flow(params, t);
  return std::norm(A) * std::norm(B);
}

double flow_mod_diff(const GaussianParams& params, double t) {
  const auto [A, B] = flow(params, t);
  return std::norm(A) - std::norm(B);
}

FlowResiduals lemma51_residuals(const GaussianParams& params, double t, double h) {
  // Differencing O(100)-sized quantities at h = 1e-5 loses ~1e-8 in double,
  // so the flow is evaluated in extended precision here.
  using ld = long double;
  using cld = std::complex<ld>;
  const cld A0{params.A().real(), params.A().imag()};
  const cld B0{params.B().real(), params.B().imag()};
  const cld i{0.0L, 1.0L};
  struct Point {
    ld f, im, diff;
  };
  const auto at = [&](ld s) {
    const ld c = std::cos(s);
    const ld sn = std::sin(s);
    const cld A = A0 * c + i * B0 * sn;
    const cld B = i * A0 * sn + B0 * c;
    const ld a2 = std::norm(A);
    const ld b2 = std::norm(B);
    return Point{a2 * b2, (B * std::conj(A)).imag(), a2 - b2};
  };
  const ld tl = t;
  const ld hl = h;
  const Point m2 = at(tl - 2 * hl), m1 = at(tl - hl), p1 = at(tl + hl), p2 = at(tl + 2 * hl);
  const Point c = at(tl);
  const auto d = [&](ld Point::*field) {
    return (m2.*field - 8 * (m1.*field) + 8 * (p1.*field) - p2.*field) / (12 * hl);
  };

  FlowResiduals r;
  r.r1 = static_cast<double>(d(&Point::f) - 2 * c.diff * c.im);
  r.r2 = static_cast<double>(d(&Point::im) - c.diff);
  r.r3 = static_cast<double>(d(&Point::diff) + 4 * c.im);
  return r;
}

ScanResult scan_minimize(const GaussianParams& params, int n) {
  if (n < 1000) throw std::invalid_argument("scan needs at least 1000 grid points");
  const double step = std::numbers::pi / n;

  int best = 0;
  double best_val = flow_product(params, 0.0);
  double worst_val = best_val;
  for (int i = 1; i < n; ++i) {
    const double v = flow_product(params, i * step);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
    worst_val = std::max(worst_val, v);
  }

  ScanResult out;
  out.grid_argmin = best * step;
  if (worst_val - best_val <= 1e-14) {
    // Flat landscape: every angle minimizes.
    out.t_star = out.grid_argmin;
    out.min_product = best_val;
    return out;
  }

  // |A|^2|B|^2 = 1 + g exactly on allowed parameters, and g keeps full
  // relative precision near its zero where the product itself is flat.
  const auto g = [&](double t) {
    const double im = flow_im_ba(params, t);
    return im * im;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = out.grid_argmin - step;
  double hi = out.grid_argmin + step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  while (hi - lo > 1e-13) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    }
  }
  double t = 0.5 * (lo + hi);
  t = std::fmod(t, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  out.t_star = t;
  out.min_product = flow_product(params, t);
  return out;
}

double angle_distance_mod_half_pi(double t1, double t2) {
  const double period = std::numbers::pi / 2.0;
  double d = std::fmod(t1 - t2, period);
  if (d < 0.0) d += period;
  return std::min(d, period - d);
}

}  // namespace wpkit
