#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torustab {

struct SelfCheckOptions {
  int max_n = 4;          // largest crossing number for the exhaustive checks
  int trials = 1000;      // random relabelling trials
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Quick internal consistency checks that need no reference data: canonical forms
// under random relabelling, mirror identity, circle conservation, thread
// independence of the enumeration and byte-identical reruns.
std::vector<CheckResult> run_self_checks(const SelfCheckOptions& options = {});

}  // namespace torustab
