#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hololab/limits.hpp"

namespace hololab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  /// One-line summary of what was measured.
  std::string detail;
  /// Named sub-checks that failed, empty on success.
  std::vector<std::string> failures;
};

/// Runs the numbered criteria (all when `only` is empty), printing one
/// "PASS"/"FAIL" line per criterion to `out` as each finishes.
std::vector<CriterionResult> run(const Limits& limits, std::ostream& out,
                                 const std::vector<int>& only = {});

inline constexpr int kCriteria = 10;

}  // namespace hololab::acceptance
