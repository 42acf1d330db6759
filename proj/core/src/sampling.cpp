#include "wpkit/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace wpkit {

GaussianParams random_params(std::mt19937_64& rng, SamplingRange range) {
  static constexpr std::array<double, 3> kHbars{0.01, 0.1, 1.0};
  std::uniform_int_distribution<std::size_t> pick(0, kHbars.size() - 1);
  return random_params(rng, kHbars[pick(rng)], range);
}

GaussianParams random_params(std::mt19937_64& rng, double hbar, SamplingRange range) {
  const double lo_a = std::max(range.mod_min, 1.0 / range.mod_max);
  std::uniform_real_distribution<double> mod_a(lo_a, range.mod_max);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> center(-2.0, 2.0);
  std::bernoulli_distribution sign;

  const double ma = mod_a(rng);
  const complex A = std::polar(ma, phase(rng));
  // |B| = sqrt(1 + s^2) / |A| >= 1 / |A|.
  std::uniform_real_distribution<double> mod_b(std::max(range.mod_min, 1.0 / ma), range.mod_max);
  const double mb = mod_b(rng);
  const double s = std::sqrt(std::max(0.0, mb * mb * ma * ma - 1.0)) * (sign(rng) ? 1.0 : -1.0);
  const complex B = complex{1.0, s} / std::conj(A);
  const double a = center(rng);
  const double eta = center(rng);
  return GaussianParams::validate(A, B, hbar, a, eta);
}

}  // namespace wpkit
