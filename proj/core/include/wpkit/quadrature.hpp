#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "wpkit/complex_poly.hpp"
#include "wpkit/observables.hpp"
#include "wpkit/params.hpp"
#include "wpkit/wavepacket.hpp"

// Grid-based moments of linear observables. This engine shares nothing with
// the ladder algebra in observables.hpp and serves as its cross-check.

namespace wpkit {

class GridTooCoarse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuadratureSpec {
  double half_width = 0.0;
  int points = 4001;  // odd, so the center is a node
};

/// Symmetric grid around a with half-width 10 max(dx, sqrt(hbar)), where dx
/// is the position spread of phi_degree.
QuadratureSpec default_quadrature(const GaussianParams& params, int degree, int points = 4001);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of obs in the state q(x - a) phi_0(x). The state need
/// not be normalized; moments are divided by its squared norm.
///
/// Momentum acts analytically: (p - eta)(q phi_0) = [-i hbar q' + i (B/A) y q] phi_0.
Moments quadrature_moments(const GaussianParams& params, const ComplexPoly& q,
                           const LinearObservable& obs, const QuadratureSpec& grid);

Moments quadrature_expectation(const WavePacket& wp, const LinearObservable& obs,
                               const QuadratureSpec& grid);

/// <q1 phi_0, q2 phi_0> by the composite trapezoid rule.
std::complex<double> quadrature_overlap(const GaussianParams& params, const ComplexPoly& q1,
                                        const ComplexPoly& q2, const QuadratureSpec& grid);

/// Matrix of pairwise overlaps <q_i phi_0, q_j phi_0>, row-major.
std::vector<std::complex<double>> quadrature_gram(const GaussianParams& params,
                                                  std::span<const ComplexPoly> polys,
                                                  const QuadratureSpec& grid);

/// Trapezoid weights and nodes for the spec, centered at the packet's mean
/// position. Throws GridTooCoarse unless half_width >= 8 dx and
/// spacing <= dx / 20 for the spread dx of phi_degree.
struct Grid {
  std::vector<double> nodes;
  double spacing = 0.0;
};
Grid make_grid(const GaussianParams& params, int degree, const QuadratureSpec& spec);

}  // namespace wpkit
