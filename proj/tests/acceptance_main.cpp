// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>

#include "addcomb/verify.hpp"

int main() {
  auto results = addcomb::run_acceptance();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-32s (%6.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%s: %zu criteria\n", all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              results.size());
  return all_pass ? 0 : 1;
}
