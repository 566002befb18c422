#include <cstdio>

#include "hilbgap/paper_check.hpp"

int main() {
  int failed = 0;
  hilbgap::run_paper_checks([&](const hilbgap::CriterionResult& r) {
    std::printf("%s %d %s: %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  return failed == 0 ? 0 : 1;
}
