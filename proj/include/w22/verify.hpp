#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "w22/module.hpp"

// Self-checks of the engine against the structural theorems it implements.
// Every check is exact; randomized checks draw from a seeded generator.

namespace w22 {

struct VerifyConfig {
  /// Window for checks whose size is not fixed by the check itself.
  Truncation trunc{4, 3, 2};
  std::uint64_t seed = 7;
};

struct CheckResult {
  std::string name;
  std::string summary;
  bool passed = false;
  /// What was exercised, or the first counterexample.
  std::string detail;
  double seconds = 0;
};

/// Check names in execution order.
const std::vector<std::string>& check_names();
/// One-line description of a check.
const std::string& check_summary(std::string_view name);

/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(std::string_view name, const VerifyConfig& cfg);
/// "all" or a single check name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyConfig& cfg);

}  // namespace w22
