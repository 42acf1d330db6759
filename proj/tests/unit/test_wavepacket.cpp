#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wpkit/quadrature.hpp"
#include "wpkit/sampling.hpp"
#include "wpkit/wavepacket.hpp"

using namespace wpkit;
using c = std::complex<double>;

namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

GaussianParams squeezed() { return GaussianParams::validate({1, 0}, {1, 1}, 1.0); }

// Normalized Hermite function, the standard-oscillator eigenfunction.
double hermite_function(unsigned k, double x) {
  return std::hermite(k, x) * std::exp(-0.5 * x * x) /
         std::sqrt(std::pow(2.0, k) * std::tgamma(k + 1.0) * std::sqrt(std::numbers::pi));
}

}  // namespace

TEST_CASE("ground state values") {
  const auto p = standard_oscillator(1.0, 1.0);
  const auto wp = ground_state(p);
  CHECK(wp.k() == 0);
  CHECK(wp.poly() == ComplexPoly::one());
  CHECK(std::abs(evaluate_ground(p, 0.0) - c{kPiQuarter}) < 1e-15);

  // pi^(-1/4) exp(-(1+i)/2), frozen from a 30-digit evaluation.
  const c expected{0.399809653291442827, -0.218417009056697852};
  CHECK(std::abs(evaluate_ground(squeezed(), 1.0) - expected) < 1e-15);

  // Center value is the prefactor regardless of eta.
  const auto shifted = GaussianParams::validate({1, 0}, {1, 0}, 1.0, 2.0, 3.0);
  const double x = 2.0;
  CHECK(std::abs(evaluate(ground_state(shifted), std::span<const double>(&x, 1))[0] -
                 c{kPiQuarter}) < 1e-15);
}

TEST_CASE("ground state matches the explicit formula off center") {
  const c A0 = std::polar(1.3, 2.0);
  const auto p = GaussianParams::validate(A0, c{1.0, 0.7} / std::conj(A0), 0.1, -0.4, 1.7);
  for (double x : {-1.0, -0.3, 0.2, 0.9}) {
    const c A = p.A(), B = p.B();
    const double y = x - p.a();
    const c formula = std::pow(std::numbers::pi * p.hbar(), -0.25) * std::pow(A, -0.5) *
                      std::exp(-B * y * y / (2.0 * A * p.hbar()) + c{0, 1} * p.eta() * y / p.hbar());
    CHECK(std::abs(evaluate_ground(p, x) - formula) < 1e-13 * std::abs(formula) + 1e-300);
  }
}

TEST_CASE("principal branch of A^(-1/2)") {
  // A = i: principal sqrt(i) = e^{i pi/4}.
  const auto p = GaussianParams::validate({0, 1}, {0, 1}, 1.0);
  const c pre = ground_prefactor(p);
  CHECK(std::abs(pre - kPiQuarter * std::exp(c{0, -std::numbers::pi / 4})) < 1e-15);
}

TEST_CASE("raise") {
  const auto std_wp = raise(ground_state(standard_oscillator(1.0, 1.0)));
  CHECK(std_wp.k() == 1);
  CHECK(max_relative_difference(std_wp.poly(), ComplexPoly{c{0}, c{std::sqrt(2.0)}}) < 1e-15);

  // Only A and conj(A) enter the raising recurrence.
  const auto sq = raise(ground_state(squeezed()));
  CHECK(max_relative_difference(sq.poly(), ComplexPoly{c{0}, c{std::sqrt(2.0)}}) < 1e-15);

  const double x = 0.0;
  CHECK(std::abs(evaluate(std_wp, std::span<const double>(&x, 1))[0]) == 0.0);
}

TEST_CASE("lower") {
  CHECK_FALSE(lower(ground_state(squeezed())).has_value());

  std::mt19937_64 rng(3);
  const auto p = random_params(rng);
  const auto back = lower(raise(ground_state(p)));
  REQUIRE(back.has_value());
  CHECK(back->k() == 0);
  CHECK(max_relative_difference(back->poly(), ComplexPoly::one()) < 1e-14);

  // Raw lowering of phi_3 is sqrt(3) phi_2.
  const auto phi2 = excited_state(p, 2);
  const auto phi3 = raise(phi2);
  const ComplexPoly raw = apply_lowering(p, phi3.poly());
  CHECK(max_relative_difference(raw, std::sqrt(3.0) * phi2.poly()) < 1e-13);
}

TEST_CASE("standard oscillator basis equals Hermite functions") {
  const auto p = standard_oscillator(1.0, 1.0);
  auto wp = ground_state(p);
  for (unsigned k = 0; k <= 12; ++k) {
    for (double x : {-3.1, -1.0, -0.2, 0.5, 2.4}) {
      const c v = evaluate(wp, std::span<const double>(&x, 1))[0];
      CHECK(std::abs(v - hermite_function(k, x)) < 1e-12);
    }
    wp = raise(wp);
  }
}

TEST_CASE("raising recurrence agrees with the differential operator") {
  // Apply A* = (2 hbar)^(-1/2) [conj(B) (x-a) - i conj(A) (p - eta)] to sampled
  // phi_k with p = -i hbar d/dx by a five-point stencil.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_params(rng, 1.0);
    const double hbar = p.hbar();
    const c i{0, 1};
    auto wp = ground_state(p);
    for (int k = 0; k < 6; ++k) {
      const auto next = raise(wp);
      const double dx = std::sqrt(hbar / 2) * std::abs(p.A());
      for (double s : {-1.5, -0.4, 0.3, 1.1}) {
        const double x = p.a() + s * dx;
        const double h = 1e-3 * dx;
        const std::vector<double> xs{x - 2 * h, x - h, x, x + h, x + 2 * h};
        const auto f = evaluate(wp, xs);
        const c df = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
        const c pf = -i * hbar * df - p.eta() * f[2];
        const c expected = (std::conj(p.B()) * (x - p.a()) * f[2] - i * std::conj(p.A()) * pf) /
                           std::sqrt(2 * hbar * (k + 1));
        const c got = evaluate(next, std::span<const double>(&x, 1))[0];
        const double scale = std::sqrt(std::norm(f[2]) + std::norm(got)) + 1e-3;
        CHECK(std::abs(got - expected) < 1e-7 * scale);
      }
      wp = next;
    }
  }
}

TEST_CASE("property: ladder identity up to k = 20") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(rng);
    auto wp = ground_state(p);
    for (int k = 0; k < 20; ++k) {
      const auto up = raise(wp);
      CHECK(up.poly().degree() == k + 1);
      const auto down = lower(up);
      REQUIRE(down.has_value());
      CHECK(max_relative_difference(down->poly(), wp.poly()) < 1e-10);
      wp = up;
    }
  }
}

TEST_CASE("property: parity of q_k for centered packets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = random_params(rng);
    const auto p = GaussianParams::validate(r.A(), r.B(), r.hbar());
    const auto wp = excited_state(p, 15);
    auto q = ground_state(p);
    for (int k = 0; k <= 15; ++k) {
      for (int m = 0; m <= k; ++m) {
        if ((m + k) % 2 == 1) CHECK(q.poly().coeff(static_cast<std::size_t>(m)) == c{});
      }
      q = raise(q);
    }
    CHECK(wp.poly().degree() == 15);
  }
}

TEST_CASE("property: normalization for k <= 15") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_params(rng);
    auto wp = ground_state(p);
    for (int k = 0; k <= 15; ++k) {
      const auto n2 = quadrature_overlap(p, wp.poly(), wp.poly(), default_quadrature(p, k));
      CHECK(std::abs(n2 - 1.0) < 1e-9);
      wp = raise(wp);
    }
  }
}

TEST_CASE("invalid packets are rejected") {
  const auto p = squeezed();
  CHECK_THROWS_AS(WavePacket(p, 2, ComplexPoly::one()), std::invalid_argument);
  CHECK_THROWS_AS(WavePacket(p, -1, ComplexPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(excited_state(p, -3), std::invalid_argument);
}
