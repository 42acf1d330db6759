#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wpkit {

using complex = std::complex<double>;

enum class ParamErrc {
  NormalizationViolation,
  NonPositiveHbar,
  ZeroParameter,
  NonPositiveOmega,
};

const char* to_string(ParamErrc code);

class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  ParamErrc code() const noexcept { return code_; }

 private:
  ParamErrc code_;
};

inline constexpr double kDefaultParamTol = 1e-12;

/// Parameter tuple (A, B, hbar, a, eta) indexing one family of semiclassical
/// wave packets. Instances always satisfy |Re(conj(A) B) - 1| <= tol and
/// hbar > 0 for the tolerance they were validated against.
class GaussianParams {
 public:
  /// Checks the tuple and returns it unchanged. Never renormalizes.
  static GaussianParams validate(complex A, complex B, double hbar,
                                 double a = 0.0, double eta = 0.0,
                                 double tol = kDefaultParamTol);

  complex A() const noexcept { return A_; }
  complex B() const noexcept { return B_; }
  double hbar() const noexcept { return hbar_; }
  double a() const noexcept { return a_; }
  double eta() const noexcept { return eta_; }

  // Re(conj(A) B), equal to 1 for an allowed tuple.
  double normalization() const noexcept;
  // Im(B conj(A)), the off-diagonal entry of the quadratic Hamiltonian.
  double im_ba() const noexcept;

  friend bool operator==(const GaussianParams&, const GaussianParams&) = default;

 private:
  GaussianParams(complex A, complex B, double hbar, double a, double eta)
      : A_(A), B_(B), hbar_(hbar), a_(a), eta_(eta) {}

  complex A_;
  complex B_;
  double hbar_;
  double a_;
  double eta_;
};

/// Ground state of the frequency-omega oscillator: A = omega^(-1/2),
/// B = omega^(1/2), centered at the origin.
GaussianParams standard_oscillator(double omega, double hbar);

/// Explicit repair for tuples that drifted off the constraint:
/// B <- B + (1 - Re(conj(A) B)) / conj(A). Returns the repaired B.
complex repair_normalization(complex A, complex B);

}  // namespace wpkit
