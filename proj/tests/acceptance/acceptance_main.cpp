// Runs every acceptance criterion at full size and prints one line per criterion.
#include <cstdio>

#include "selfcheck/acceptance.hpp"

int main() {
  const auto results = ivpoly::selfcheck::run_acceptance(ivpoly::selfcheck::AcceptanceConfig{});
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%.2f s) - %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    failures += r.passed ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
