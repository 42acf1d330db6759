#include <doctest.h>

#include "wpkit/complex_poly.hpp"

using wpkit::ComplexPoly;
using c = std::complex<double>;

TEST_CASE("trailing zeros are trimmed") {
  const ComplexPoly p{c{1}, c{2}, c{0}, c{0}};
  CHECK(p.degree() == 1);
  CHECK(ComplexPoly{}.degree() == -1);
  CHECK(ComplexPoly{c{0}}.is_zero());
}

TEST_CASE("Horner evaluation, derivative and shift") {
  const ComplexPoly p{c{1}, c{0, 2}, c{3}};  // 1 + 2i y + 3 y^2
  CHECK(p(2.0) == c{13, 4});
  CHECK(p.derivative() == ComplexPoly{c{0, 2}, c{6}});
  CHECK(p.shift_up() == ComplexPoly{c{0}, c{1}, c{0, 2}, c{3}});
  CHECK(ComplexPoly::one().derivative().is_zero());
}

TEST_CASE("arithmetic") {
  const ComplexPoly p{c{1}, c{1}};
  const ComplexPoly q{c{0}, c{-1}, c{2}};
  CHECK(p + q == ComplexPoly{c{1}, c{0}, c{2}});
  CHECK(p - p == ComplexPoly{});
  CHECK(c{0, 1} * p == ComplexPoly{c{0, 1}, c{0, 1}});
  CHECK(wpkit::max_relative_difference(p, p) == 0.0);
  CHECK(wpkit::max_relative_difference(ComplexPoly{c{1}, c{1.5}}, ComplexPoly{c{1}, c{2}}) ==
        doctest::Approx(0.25));
}
