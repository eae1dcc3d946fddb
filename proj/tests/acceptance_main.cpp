// Runs the full self-validation suite and prints one PASS/FAIL line per
// criterion. Exit status 0 iff every criterion passed.

#include <cstdio>

#include "thermowire/validation.hpp"

int main() {
  const auto results = thermowire::run_validation();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %s — %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%zu criteria, %s\n", results.size(),
              all ? "all passed" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
