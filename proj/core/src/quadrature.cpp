#include "wpkit/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace wpkit {

namespace {

double position_spread(const GaussianParams& params, int degree) {
  return std::sqrt(0.5 * params.hbar()) * std::abs(params.A()) * std::sqrt(2.0 * degree + 1.0);
}

double trapezoid(const std::vector<double>& f, double h) {
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return h * (s + 0.5 * (f.front() + f.back()));
}

std::complex<double> trapezoid(const std::vector<std::complex<double>>& f, double h) {
  std::complex<double> s{};
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return h * (s + 0.5 * (f.front() + f.back()));
}

}  // namespace

QuadratureSpec default_quadrature(const GaussianParams& params, int degree, int points) {
  const double dx = position_spread(params, std::max(degree, 0));
  return {10.0 * std::max(dx, std::sqrt(params.hbar())), points};
}

Grid make_grid(const GaussianParams& params, int degree, const QuadratureSpec& spec) {
  if (spec.points < 3 || spec.points % 2 == 0) {
    throw GridTooCoarse("quadrature needs an odd number of points >= 3");
  }
  const double dx = position_spread(params, std::max(degree, 0));
  const double h = 2.0 * spec.half_width / (spec.points - 1);
  if (!(spec.half_width >= 8.0 * dx)) {
    throw GridTooCoarse("quadrature half-width must be at least 8 position spreads");
  }
  if (!(h <= dx / 20.0)) {
    throw GridTooCoarse("quadrature spacing must be at most 1/20 of the position spread");
  }
  Grid g;
  g.spacing = h;
  g.nodes.resize(static_cast<std::size_t>(spec.points));
  const int half = spec.points / 2;
  for (int i = 0; i < spec.points; ++i) {
    g.nodes[static_cast<std::size_t>(i)] = params.a() + (i - half) * h;
  }
  return g;
}

Moments quadrature_moments(const GaussianParams& params, const ComplexPoly& q,
                           const LinearObservable& obs, const QuadratureSpec& spec) {
  const Grid g = make_grid(params, std::max(q.degree(), 0), spec);
  const std::complex<double> i{0.0, 1.0};
  const double hbar = params.hbar();
  const std::complex<double> b_over_a = params.B() / params.A();

  const auto ground = evaluate(params, ComplexPoly::one(), g.nodes);
  const ComplexPoly dq = q.derivative();

  const std::size_t n = g.nodes.size();
  std::vector<double> norm2(n), second(n);
  std::vector<std::complex<double>> first(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = g.nodes[j] - params.a();
    const std::complex<double> qy = q(y);
    const std::complex<double> psi = qy * ground[j];
    const std::complex<double> p_psi = (-i * hbar * dq(y) + i * b_over_a * y * qy) * ground[j];
    const std::complex<double> o_psi = obs.cx * y * psi + obs.cp * p_psi;
    norm2[j] = std::norm(psi);
    first[j] = std::conj(psi) * o_psi;
    second[j] = std::norm(o_psi);  // <O^2> = ||O psi||^2 for self-adjoint O
  }
  const double nrm = trapezoid(norm2, g.spacing);
  const double m1 = trapezoid(first, g.spacing).real() / nrm;
  const double m2 = trapezoid(second, g.spacing) / nrm;
  return {m1, m2 - m1 * m1};
}

Moments quadrature_expectation(const WavePacket& wp, const LinearObservable& obs,
                               const QuadratureSpec& grid) {
  return quadrature_moments(wp.params(), wp.poly(), obs, grid);
}

std::complex<double> quadrature_overlap(const GaussianParams& params, const ComplexPoly& q1,
                                        const ComplexPoly& q2, const QuadratureSpec& spec) {
  const int degree = std::max({q1.degree(), q2.degree(), 0});
  const Grid g = make_grid(params, degree, spec);
  const auto f1 = evaluate(params, q1, g.nodes);
  const auto f2 = evaluate(params, q2, g.nodes);
  std::vector<std::complex<double>> integrand(f1.size());
  for (std::size_t j = 0; j < f1.size(); ++j) integrand[j] = std::conj(f1[j]) * f2[j];
  return trapezoid(integrand, g.spacing);
}

std::vector<std::complex<double>> quadrature_gram(const GaussianParams& params,
                                                  std::span<const ComplexPoly> polys,
                                                  const QuadratureSpec& spec) {
  int degree = 0;
  for (const auto& q : polys) degree = std::max(degree, q.degree());
  const Grid g = make_grid(params, degree, spec);

  std::vector<std::vector<std::complex<double>>> values;
  values.reserve(polys.size());
  for (const auto& q : polys) values.push_back(evaluate(params, q, g.nodes));

  const std::size_t n = polys.size();
  std::vector<std::complex<double>> gram(n * n);
  std::vector<std::complex<double>> integrand(g.nodes.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t m = 0; m < integrand.size(); ++m) {
        integrand[m] = std::conj(values[i][m]) * values[j][m];
      }
      gram[i * n + j] = trapezoid(integrand, g.spacing);
      gram[j * n + i] = std::conj(gram[i * n + j]);
    }
  }
  return gram;
}

}  // namespace wpkit
