#include "wpkit/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpkit {

WavePacket::WavePacket(GaussianParams params, int k, ComplexPoly poly)
    : params_(params), k_(k), poly_(std::move(poly)) {
  if (k_ < 0) throw std::invalid_argument("excitation index must be nonnegative");
  if (poly_.degree() != k_) {
    throw std::invalid_argument("packet polynomial degree must equal its index");
  }
}

WavePacket ground_state(const GaussianParams& params) {
  return WavePacket(params, 0, ComplexPoly::one());
}

WavePacket excited_state(const GaussianParams& params, int k) {
  if (k < 0) throw std::invalid_argument("excitation index must be nonnegative");
  WavePacket wp = ground_state(params);
  for (int j = 0; j < k; ++j) wp = raise(wp);
  return wp;
}

ComplexPoly apply_raising(const GaussianParams& params, const ComplexPoly& q) {
  const std::complex<double> A = params.A();
  const double hbar = params.hbar();
  ComplexPoly out = (2.0 / A) * q.shift_up() - (hbar * std::conj(A)) * q.derivative();
  return out * (1.0 / std::sqrt(2.0 * hbar));
}

ComplexPoly apply_lowering(const GaussianParams& params, const ComplexPoly& q) {
  return (std::sqrt(params.hbar() / 2.0) * params.A()) * q.derivative();
}

WavePacket raise(const WavePacket& wp) {
  const int k = wp.k();
  ComplexPoly next = apply_raising(wp.params(), wp.poly()) * (1.0 / std::sqrt(k + 1.0));
  return WavePacket(wp.params(), k + 1, std::move(next));
}

std::optional<WavePacket> lower(const WavePacket& wp) {
  const int k = wp.k();
  if (k == 0) return std::nullopt;
  ComplexPoly prev = apply_lowering(wp.params(), wp.poly()) * (1.0 / std::sqrt(double(k)));
  return WavePacket(wp.params(), k - 1, std::move(prev));
}

std::complex<double> ground_prefactor(const GaussianParams& params) {
  const double scale = std::pow(std::numbers::pi * params.hbar(), -0.25);
  return scale / std::sqrt(params.A());
}

namespace {

std::complex<double> ground_exponent(const GaussianParams& params, double y) {
  const double hbar = params.hbar();
  const std::complex<double> i{0.0, 1.0};
  return -params.B() * (y * y) / (2.0 * params.A() * hbar) + i * params.eta() * y / hbar;
}

}  // namespace

std::complex<double> evaluate_ground(const GaussianParams& params, double x) {
  const double y = x - params.a();
  return ground_prefactor(params) * std::exp(ground_exponent(params, y));
}

std::vector<std::complex<double>> evaluate(const GaussianParams& params, const ComplexPoly& q,
                                           std::span<const double> xs) {
  const std::complex<double> pre = ground_prefactor(params);
  std::vector<std::complex<double>> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const double y = x - params.a();
    out.push_back(q(y) * pre * std::exp(ground_exponent(params, y)));
  }
  return out;
}

std::vector<std::complex<double>> evaluate(const WavePacket& wp, std::span<const double> xs) {
  return evaluate(wp.params(), wp.poly(), xs);
}

}  // namespace wpkit
