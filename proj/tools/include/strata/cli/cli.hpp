#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strata/enumerate.hpp"

namespace strata::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kInternalError = 2;

// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "V,E" with both positive.
Caps parse_caps(const std::string& text);
// Comma-separated signed integers.
std::vector<int> parse_orders(const std::string& text);

}  // namespace strata::cli
