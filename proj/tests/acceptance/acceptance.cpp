#include <iostream>

#include "strata/cli/selfcheck.hpp"

int main() {
  int failed = 0;
  for (const auto& r : strata::cli::run_selfcheck()) {
    std::cout << strata::cli::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED " : "all criteria passed") << (failed ? std::to_string(failed) + " criteria" : "")
            << std::endl;
  return failed ? 1 : 0;
}
