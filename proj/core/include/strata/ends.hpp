#pragma once

#include <optional>
#include <string>

#include "strata/components.hpp"
#include "strata/enumerate.hpp"
#include "strata/signature.hpp"

namespace strata {

// Result of the boundary complex check run by count_ends when asked.
struct CoarseCheck {
  bool connected = false;
  int nodes = 0;
  int edges = 0;
  int components = 0;
  bool exhaustive = true;
};

struct EndsReport {
  long long count = 0;
  std::string method;
  std::string note;
  ComponentLabel component = ComponentLabel::single();
  std::optional<CoarseCheck> verification;
};

// Number of ends of the component `comp` of the stratum. Exact in projective
// dimension < 2; otherwise 1, optionally checked against the certified
// coarse boundary complex.
EndsReport count_ends(const Signature& sig, const ComponentLabel& comp, bool verify = false,
                      const Caps& caps = {});

}  // namespace strata
