#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anum {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The acceptance suite, in id order. Each entry is self-contained and
/// deterministic; runtime budgets are checked inside the entry.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected ids (all when empty). Exceptions inside a criterion
/// are reported as a failure of that criterion.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

/// "PASS  [ 1] name (0.01 s) detail"
std::string format_result(const CriterionResult& r);

}  // namespace anum
