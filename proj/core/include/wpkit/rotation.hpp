#pragma once

#include <utility>

#include "wpkit/params.hpp"

namespace wpkit {

/// Phase-space rotation angle in radians, within [-pi/2, pi/2].
struct RotationAngle {
  double radians = 0.0;
};

/// Real symmetric 2x2 matrix M of the quadratic form (1/2) (x p) M (x p)^T.
struct QuadForm2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;

  double det() const noexcept { return m11 * m22 - m12 * m12; }
  /// R(t)^T M R(t) with R(t) = [[cos t, -sin t], [sin t, cos t]].
  QuadForm2 rotated(double t) const noexcept;
};

/// theta = atan2(2 Im(B conj(A)), |B|^2 - |A|^2) / 2, and 0 when both
/// arguments vanish (circularly symmetric packet, every angle is optimal).
RotationAngle optimal_theta(const GaussianParams& params);

/// Closed-form flow of the frequency-1 oscillator on the width parameters:
/// A(t) = A cos t + i B sin t, B(t) = i A sin t + B cos t. a and eta are kept.
GaussianParams rotate_params(const GaussianParams& params, double t);

/// [[|B|^2, Im(B conj A)], [Im(B conj A), |A|^2]].
QuadForm2 hamiltonian_matrix(const GaussianParams& params);

/// Eigenvalues (lo, hi) of M/2 in closed form. Their product is 1/4 on
/// allowed parameters.
std::pair<double, double> h_eigenvalues(const GaussianParams& params);

/// Jacobi angle annihilating the off-diagonal entry of R^T M R.
RotationAngle diagonalizing_angle(const QuadForm2& m);

/// Real form obtained by symmetrizing the matrices of hbar A A* and
/// hbar A* A; coincides with hamiltonian_matrix.
QuadForm2 h1_h2_classical_form(const GaussianParams& params);

/// Same as h1_h2_classical_form but starting from the second (A* A) matrix.
QuadForm2 h2_classical_form(const GaussianParams& params);

struct FlowResiduals {
  double r1 = 0.0;  // d/dt |A|^2|B|^2 - 2 (|A|^2 - |B|^2) Im(B conj A)
  double r2 = 0.0;  // d/dt Im(B conj A) - (|A|^2 - |B|^2)
  double r3 = 0.0;  // d/dt (|A|^2 - |B|^2) + 4 Im(B conj A)
};

/// Differences between finite-difference derivatives along rotate_params and
/// the closed-form right-hand sides for A' = iB, B' = iA. Uses the
/// fourth-order central stencil.
FlowResiduals lemma51_residuals(const GaussianParams& params, double t, double h = 1e-5);

// Scalar quantities along the flow.
double flow_product(const GaussianParams& params, double t);   // |A(t)| |B(t)|
double flow_im_ba(const GaussianParams& params, double t);     // Im(B(t) conj A(t))
double flow_f(const GaussianParams& params, double t);         // |A(t)|^2 |B(t)|^2
double flow_mod_diff(const GaussianParams& params, double t);  // |A(t)|^2 - |B(t)|^2

struct ScanResult {
  double t_star = 0.0;        // in [0, pi)
  double min_product = 0.0;   // |A(t_star)| |B(t_star)|
  double grid_argmin = 0.0;   // coarse grid minimizer before refinement
};

/// Brute-force scan of |A(t)||B(t)| on n points of [0, pi), refined by
/// golden-section search of g(t) = Im(B(t) conj A(t))^2 around the grid
/// minimizer. n must be at least 1000.
ScanResult scan_minimize(const GaussianParams& params, int n = 1024);

/// Distance between two angles modulo pi/2.
double angle_distance_mod_half_pi(double t1, double t2);

}  // namespace wpkit
