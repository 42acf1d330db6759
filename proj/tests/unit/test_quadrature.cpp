#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wpkit/observables.hpp"
#include "wpkit/quadrature.hpp"
#include "wpkit/sampling.hpp"

using namespace wpkit;
using c = std::complex<double>;

TEST_CASE("default grid shape") {
  const auto p = standard_oscillator(1.0, 1.0);
  const auto spec = default_quadrature(p, 0);
  CHECK(spec.points == 4001);
  CHECK(spec.half_width == doctest::Approx(10.0));
  const Grid g = make_grid(p, 0, spec);
  CHECK(g.nodes.size() == 4001);
  CHECK(g.nodes[2000] == 0.0);
  CHECK(g.spacing == doctest::Approx(0.005));
}

TEST_CASE("coarse grids are rejected") {
  const auto p = standard_oscillator(1.0, 1.0);
  CHECK_THROWS_AS(make_grid(p, 0, {3.0, 4001}), GridTooCoarse);
  CHECK_THROWS_AS(make_grid(p, 0, {10.0, 101}), GridTooCoarse);
  CHECK_THROWS_AS(make_grid(p, 0, {10.0, 4000}), GridTooCoarse);
  CHECK_THROWS_AS(quadrature_expectation(excited_state(p, 0), LinearObservable::position(), {10.0, 101}),
                  GridTooCoarse);
}

TEST_CASE("reference moments") {
  const auto std_wp = ground_state(standard_oscillator(1.0, 1.0));
  const auto m = quadrature_expectation(std_wp, LinearObservable::position(),
                                        default_quadrature(std_wp.params(), 0));
  CHECK(m.variance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(m.mean) < 1e-14);

  // phi_0 with B = 1 + i on [-10, 10] with 4001 points: momentum variance
  // (hbar/2)|B|^2 = 1.
  const auto sq = ground_state(GaussianParams::validate({1, 0}, {1, 1}, 1.0));
  const auto mp = quadrature_expectation(sq, LinearObservable::momentum(), {10.0, 4001});
  CHECK(mp.variance == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("overlaps") {
  const auto p = GaussianParams::validate({1, 0}, {1, 1}, 1.0);
  const auto phi0 = ground_state(p);
  const auto phi1 = raise(phi0);
  const auto spec = default_quadrature(p, 1);
  CHECK(std::abs(quadrature_overlap(p, phi0.poly(), phi1.poly(), spec)) < 1e-9);
  CHECK(std::abs(quadrature_overlap(p, phi1.poly(), phi1.poly(), spec) - 1.0) < 1e-9);
}

TEST_CASE("property: exact and quadrature variances agree") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_params(rng);
    const int k = trial % 9;
    const auto wp = excited_state(p, k);
    const auto spec = default_quadrature(p, k);
    for (const auto& obs : {LinearObservable::position(), LinearObservable::momentum(),
                            LinearObservable::alpha(angle(rng)), LinearObservable(0.3, -1.7)}) {
      const auto m = quadrature_expectation(wp, obs, spec);
      const double exact = variance(obs, wp);
      CHECK(std::abs(m.variance - exact) <= 1e-7 * exact);
      CHECK(std::abs(m.mean) <= 1e-9 * std::sqrt(exact));
    }
  }
}

TEST_CASE("property: rotated uncertainty bound in superpositions") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(rng);
    const c c0{u(rng), u(rng)}, c1{u(rng), u(rng)};
    const double n = std::sqrt(std::norm(c0) + std::norm(c1));
    const ComplexPoly q = (c0 / n) * ComplexPoly::one() + (c1 / n) * raise(ground_state(p)).poly();
    const double t = angle(rng);
    const auto spec = default_quadrature(p, 1);
    const auto a = quadrature_moments(p, q, LinearObservable::alpha(t), spec);
    const auto b = quadrature_moments(p, q, LinearObservable::beta(t), spec);
    CHECK(std::sqrt(a.variance * b.variance) >= 0.5 * p.hbar() - 1e-8);
  }
}

TEST_CASE("property: Gram matrix of phi_0..phi_10") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_params(rng);
    std::vector<ComplexPoly> polys;
    auto wp = ground_state(p);
    for (int k = 0; k <= 10; ++k) {
      polys.push_back(wp.poly());
      wp = raise(wp);
    }
    const auto g = quadrature_gram(p, polys, default_quadrature(p, 10));
    for (std::size_t i = 0; i < 11; ++i) {
      for (std::size_t j = 0; j < 11; ++j) {
        CHECK(std::abs(g[i * 11 + j] - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    }
  }
}
