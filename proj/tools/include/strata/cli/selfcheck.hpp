#pragma once

#include <string>
#include <vector>

namespace strata::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// The acceptance criteria, in order. `deep` widens the sampled signatures.
std::vector<CriterionResult> run_selfcheck(bool deep = false);

// "PASS  3  title (0.12 s): detail"
std::string format_result(const CriterionResult& result);

}  // namespace strata::cli
