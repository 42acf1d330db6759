#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "wpkit/params.hpp"

namespace wpkit::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
};

/// Phase-space support heuristic of phi_0: the level set
/// (1/2) z^T M z = hbar of the quadratic Hamiltonian, centered at (a, eta).
struct EllipseSpec {
  double center_x = 0.0;
  double center_p = 0.0;
  double tilt = 0.0;            // angle of the alpha axis
  double semiaxis_alpha = 0.0;  // along (cos tilt, sin tilt)
  double semiaxis_beta = 0.0;   // along (-sin tilt, cos tilt)
  double omega_eff = 0.0;       // sqrt(hi / lo) of the eigenvalues of M/2

  std::vector<std::array<double, 2>> boundary(int n) const;
};

EllipseSpec phase_space_ellipse(const GaussianParams& params);

/// Shortest text with 17 significant digits.
std::string format_double(double v);

/// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpkit::cli
