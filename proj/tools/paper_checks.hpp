#pragma once

// The built-in verification suite: every classification, count, and
// certificate the library is expected to reproduce, run end to end with
// one pass/fail line per criterion.

#include <iosfwd>
#include <string>
#include <vector>

namespace dissoc::checks {

struct CriterionResult {
  int id;
  std::string description;
  bool passed;
  std::string detail;  // filled on failure
  double seconds;
};

/// Runs all criteria (or the listed subset), streaming one line each.
std::vector<CriterionResult> run_paper_checks(std::ostream& out,
                                              const std::vector<int>& only = {});

}  // namespace dissoc::checks
