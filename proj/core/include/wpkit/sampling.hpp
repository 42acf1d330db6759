#pragma once

#include <random>

#include "wpkit/params.hpp"

namespace wpkit {

struct SamplingRange {
  double mod_min = 0.3;
  double mod_max = 4.0;
};

/// Random allowed parameters with |A|, |B| in [mod_min, mod_max], uniform
/// phase for A, and hbar drawn from {0.01, 0.1, 1}. B is built as
/// (1 + i s) / conj(A) so Re(conj(A) B) = 1 up to rounding.
GaussianParams random_params(std::mt19937_64& rng, SamplingRange range = {});

/// Same, with a fixed hbar and random center (a, eta).
GaussianParams random_params(std::mt19937_64& rng, double hbar, SamplingRange range = {});

}  // namespace wpkit
