#pragma once

#include <complex>
#include <string>

#include "wpkit/params.hpp"
#include "wpkit/wavepacket.hpp"

namespace wpkit {

/// cx (x - a) + cp (p - eta), a real-linear combination of the centered
/// position and momentum operators.
struct LinearObservable {
  double cx;
  double cp;
  std::string label;

  LinearObservable(double cx, double cp, std::string label = {});

  static LinearObservable position() { return {1.0, 0.0, "x"}; }
  static LinearObservable momentum() { return {0.0, 1.0, "p"}; }
  // Phase-space rotation of (x, p) by theta.
  static LinearObservable alpha(double theta);
  static LinearObservable beta(double theta);
};

struct LadderCoefficients {
  std::complex<double> raise;
  std::complex<double> lower;
};

/// (r, l) with cx (x-a) + cp (p-eta) = sqrt(hbar/2) [r A* + l A].
LadderCoefficients ladder_coefficients(const LinearObservable& obs, const GaussianParams& params);

/// Expectation of the centered observable in phi_k. Always zero: a single
/// ladder step is orthogonal to phi_k.
double mean(const LinearObservable& obs, const WavePacket& wp);

/// (hbar/2) |r|^2 (2k + 1).
double variance(const LinearObservable& obs, const WavePacket& wp);

double uncertainty(const LinearObservable& obs, const WavePacket& wp);

/// c with [O1, O2] = i c hbar.
double commutator_constant(const LinearObservable& o1, const LinearObservable& o2);

struct UncertaintyReport {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double delta_alpha = 0.0;
  double delta_beta = 0.0;
  double product_xp = 0.0;
  double product_alphabeta = 0.0;
  double theta = 0.0;
  double hbar = 0.0;
  int k = 0;
};

UncertaintyReport uncertainty_report(const GaussianParams& params, int k, double theta);

}  // namespace wpkit
