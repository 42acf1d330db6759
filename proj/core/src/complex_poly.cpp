#include "wpkit/complex_poly.hpp"

#include <algorithm>

namespace wpkit {

ComplexPoly::ComplexPoly(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ComplexPoly::ComplexPoly(std::initializer_list<value_type> coeffs) : coeffs_(coeffs) { trim(); }

void ComplexPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == value_type{}) coeffs_.pop_back();
}

ComplexPoly::value_type ComplexPoly::operator()(double y) const noexcept {
  value_type acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<value_type> out(coeffs_.size() - 1);
  for (std::size_t m = 1; m < coeffs_.size(); ++m) {
    out[m - 1] = static_cast<double>(m) * coeffs_[m];
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly ComplexPoly::shift_up() const {
  if (is_zero()) return {};
  std::vector<value_type> out(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return ComplexPoly(std::move(out));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  trim();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  trim();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(value_type s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

double max_relative_difference(const ComplexPoly& p, const ComplexPoly& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double scale = 0.0;
  double diff = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    scale = std::max(scale, std::abs(q.coeff(m)));
    diff = std::max(diff, std::abs(p.coeff(m) - q.coeff(m)));
  }
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace wpkit
