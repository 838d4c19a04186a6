#pragma once

#include <string>
#include <vector>

namespace pullback {

// One verification check: a fixed battery of exact identities, worked
// examples, oracle cross-checks and randomized property checks covering the
// whole library.  Randomness is seeded deterministically.
struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  double millis = 0.0;
  std::string detail;
};

// Runs the ten checks in order.  jobs parallelizes the big attractor scan
// only; results are identical for any value.
std::vector<CheckResult> run_verification(int jobs = 1);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pullback
