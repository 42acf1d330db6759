#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wpkit {

/// Dense polynomial with complex coefficients; coeffs()[m] multiplies y^m.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class ComplexPoly {
 public:
  using value_type = std::complex<double>;

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<value_type> coeffs);
  ComplexPoly(std::initializer_list<value_type> coeffs);

  static ComplexPoly one() { return ComplexPoly{value_type{1.0}}; }

  std::span<const value_type> coeffs() const noexcept { return coeffs_; }
  value_type coeff(std::size_t m) const noexcept {
    return m < coeffs_.size() ? coeffs_[m] : value_type{};
  }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  value_type operator()(double y) const noexcept;

  ComplexPoly derivative() const;
  // y * p(y)
  ComplexPoly shift_up() const;

  ComplexPoly& operator+=(const ComplexPoly& rhs);
  ComplexPoly& operator-=(const ComplexPoly& rhs);
  ComplexPoly& operator*=(value_type s);

  friend ComplexPoly operator+(ComplexPoly lhs, const ComplexPoly& rhs) { return lhs += rhs; }
  friend ComplexPoly operator-(ComplexPoly lhs, const ComplexPoly& rhs) { return lhs -= rhs; }
  friend ComplexPoly operator*(ComplexPoly p, value_type s) { return p *= s; }
  friend ComplexPoly operator*(value_type s, ComplexPoly p) { return p *= s; }

  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void trim();

  std::vector<value_type> coeffs_;
};

/// Largest coefficient-wise |p_m - q_m| divided by the largest |q_m|.
double max_relative_difference(const ComplexPoly& p, const ComplexPoly& q);

}  // namespace wpkit
