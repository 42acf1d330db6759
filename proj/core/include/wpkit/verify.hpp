#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpkit {

struct VerifyOptions {
  std::uint64_t seed = 20120714;
  int trials = 100;
  // Replaces one tolerance with an impossible value so the harness itself
  // can be checked for failure reporting.
  bool tamper = false;
};

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_residual <= tolerance; }
};

/// Runs every invariant suite on `trials` seeded random parameter sets.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace wpkit
