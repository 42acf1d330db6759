#include "wpkit/params.hpp"

#include <cmath>
#include <sstream>

namespace wpkit {

const char* to_string(ParamErrc code) {
  switch (code) {
    case ParamErrc::NormalizationViolation:
      return "NormalizationViolation";
    case ParamErrc::NonPositiveHbar:
      return "NonPositiveHbar";
    case ParamErrc::ZeroParameter:
      return "ZeroParameter";
    case ParamErrc::NonPositiveOmega:
      return "NonPositiveOmega";
  }
  return "unknown";
}

GaussianParams GaussianParams::validate(complex A, complex B, double hbar,
                                        double a, double eta, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("validation tolerance must be positive");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw ParamError(ParamErrc::NonPositiveHbar, "hbar must be positive");
  }
  if (A == complex{} || B == complex{}) {
    throw ParamError(ParamErrc::ZeroParameter, "A and B must be nonzero");
  }
  const double residual = (std::conj(A) * B).real() - 1.0;
  if (!(std::abs(residual) <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Re(conj(A) B) - 1 = " << residual << " exceeds tolerance " << tol;
    throw ParamError(ParamErrc::NormalizationViolation, msg.str());
  }
  return GaussianParams(A, B, hbar, a, eta);
}

double GaussianParams::normalization() const noexcept {
  return (std::conj(A_) * B_).real();
}

double GaussianParams::im_ba() const noexcept {
  return (B_ * std::conj(A_)).imag();
}

GaussianParams standard_oscillator(double omega, double hbar) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ParamError(ParamErrc::NonPositiveOmega, "omega must be positive");
  }
  const double root = std::sqrt(omega);
  return GaussianParams::validate(complex{1.0 / root}, complex{root}, hbar);
}

complex repair_normalization(complex A, complex B) {
  const double re = (std::conj(A) * B).real();
  return B + (1.0 - re) / std::conj(A);
}

}  // namespace wpkit
