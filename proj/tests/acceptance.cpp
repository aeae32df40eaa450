// End-to-end acceptance runner: executes every built-in criterion and
// prints one pass/fail line each.  Exit status 0 only when all pass.
//
// Usage: acceptance [criterion-id ...]

#include <cstdlib>
#include <iostream>
#include <vector>

#include "paper_checks.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    only.push_back(std::atoi(argv[i]));
  }
  auto results = dissoc::checks::run_paper_checks(std::cout, only);
  int failures = 0;
  double total = 0;
  for (const auto& r : results) {
    failures += r.passed ? 0 : 1;
    total += r.seconds;
  }
  std::cout << results.size() - failures << "/" << results.size()
            << " criteria passed in " << static_cast<int>(total) << "s"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
