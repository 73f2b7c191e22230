#pragma once

#include "takiff/klbgg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace takiff {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs the eight acceptance criteria in order. A criterion passes only when
/// its check is exact and it finishes within its time budget.
std::vector<CriterionResult> run_acceptance(KLCache& cache,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: "[PASS] 3 name (0.41 s / 30 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace takiff
