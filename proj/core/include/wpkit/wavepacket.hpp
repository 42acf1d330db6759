#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "wpkit/complex_poly.hpp"
#include "wpkit/params.hpp"

namespace wpkit {

/// phi_k(A, B, hbar, a, eta, x) stored exactly as q_k(x - a) * phi_0(x).
///
/// The polynomial q_k has degree k and q_0 == 1. Packets are immutable; the
/// ladder operations return new packets.
class WavePacket {
 public:
  WavePacket(GaussianParams params, int k, ComplexPoly poly);

  const GaussianParams& params() const noexcept { return params_; }
  int k() const noexcept { return k_; }
  const ComplexPoly& poly() const noexcept { return poly_; }

 private:
  GaussianParams params_;
  int k_;
  ComplexPoly poly_;
};

WavePacket ground_state(const GaussianParams& params);

/// phi_k built by k applications of raise().
WavePacket excited_state(const GaussianParams& params, int k);

// Raw ladder actions on q * phi_0, returning the polynomial multiplying phi_0.
//
//   A*(q phi_0) = (2 hbar)^(-1/2) [ (2/A) y q - hbar conj(A) q' ] phi_0
//   A (q phi_0) = (hbar/2)^(1/2) A q' phi_0
//
// The raising form uses conj(B) + conj(A) B / A = 2 / A, which holds on
// validated parameters.
ComplexPoly apply_raising(const GaussianParams& params, const ComplexPoly& q);
ComplexPoly apply_lowering(const GaussianParams& params, const ComplexPoly& q);

/// phi_{k+1} = (k+1)^(-1/2) A* phi_k.
WavePacket raise(const WavePacket& wp);

/// phi_{k-1} = k^(-1/2) A phi_k; nullopt stands for the zero vector A phi_0.
std::optional<WavePacket> lower(const WavePacket& wp);

/// Normalization prefactor pi^(-1/4) hbar^(-1/4) A^(-1/2), principal branch.
std::complex<double> ground_prefactor(const GaussianParams& params);

/// phi_0 at one point.
std::complex<double> evaluate_ground(const GaussianParams& params, double x);

/// Pointwise values of q(x - a) phi_0(x) for an arbitrary polynomial sharing
/// the packet's Gaussian.
std::vector<std::complex<double>> evaluate(const GaussianParams& params, const ComplexPoly& q,
                                           std::span<const double> xs);

std::vector<std::complex<double>> evaluate(const WavePacket& wp, std::span<const double> xs);

}  // namespace wpkit
