// Runs every acceptance check at window (4,3,2), seed 7, and prints one line
// per check. Exit status is non-zero if any check fails.

#include <cstdio>

#include "w22/verify.hpp"

int main() {
  const w22::VerifyConfig cfg{{4, 3, 2}, 7};
  int failed = 0;
  int index = 0;
  for (const auto& name : w22::check_names()) {
    const w22::CheckResult r = w22::run_check(name, cfg);
    std::printf("[%2d] %s  %-20s %6.2fs  %s\n", ++index, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %d checks passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
