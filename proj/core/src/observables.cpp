#include "wpkit/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace wpkit {

LinearObservable::LinearObservable(double cx_, double cp_, std::string label_)
    : cx(cx_), cp(cp_), label(std::move(label_)) {
  if (cx == 0.0 && cp == 0.0) {
    throw std::invalid_argument("observable coefficients must not both vanish");
  }
}

LinearObservable LinearObservable::alpha(double theta) {
  return {std::cos(theta), std::sin(theta), "alpha"};
}

LinearObservable LinearObservable::beta(double theta) {
  return {-std::sin(theta), std::cos(theta), "beta"};
}

LadderCoefficients ladder_coefficients(const LinearObservable& obs, const GaussianParams& params) {
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> r = obs.cx * params.A() + i * obs.cp * params.B();
  const std::complex<double> l = obs.cx * std::conj(params.A()) - i * obs.cp * std::conj(params.B());
  return {r, l};
}

double mean(const LinearObservable&, const WavePacket&) { return 0.0; }

double variance(const LinearObservable& obs, const WavePacket& wp) {
  // <phi_k, (r A* + l A)^2 phi_k> keeps only r l (A* A + A A*) = |r|^2 (2k+1).
  const auto c = ladder_coefficients(obs, wp.params());
  return 0.5 * wp.params().hbar() * std::norm(c.raise) * (2.0 * wp.k() + 1.0);
}

double uncertainty(const LinearObservable& obs, const WavePacket& wp) {
  return std::sqrt(variance(obs, wp));
}

double commutator_constant(const LinearObservable& o1, const LinearObservable& o2) {
  return o1.cx * o2.cp - o1.cp * o2.cx;
}

UncertaintyReport uncertainty_report(const GaussianParams& params, int k, double theta) {
  if (k < 0) throw std::invalid_argument("excitation index must be nonnegative");
  // Variances depend on k only through 2k + 1, so no polynomial is needed.
  const WavePacket wp(params, k, [k] {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(k) + 1);
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
  }());

  UncertaintyReport rep;
  rep.delta_x = uncertainty(LinearObservable::position(), wp);
  rep.delta_p = uncertainty(LinearObservable::momentum(), wp);
  rep.delta_alpha = uncertainty(LinearObservable::alpha(theta), wp);
  rep.delta_beta = uncertainty(LinearObservable::beta(theta), wp);
  rep.product_xp = rep.delta_x * rep.delta_p;
  rep.product_alphabeta = rep.delta_alpha * rep.delta_beta;
  rep.theta = theta;
  rep.hbar = params.hbar();
  rep.k = k;
  return rep;
}

}  // namespace wpkit
