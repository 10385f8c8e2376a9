#pragma once

#include <vector>

#include "strata/divisor.hpp"
#include "strata/level_graph.hpp"
#include "strata/signature.hpp"

namespace strata {

// Search limits for graph enumeration.
struct Caps {
  int max_vertices = 6;
  int max_edges = 10;

  friend bool operator==(const Caps&, const Caps&) = default;
};

// True if no stable graph of `sig` can exceed the caps, i.e. a search within
// them is complete. Stable graphs have at most 2g - 2 + n vertices and
// 3g - 3 + n edges.
bool caps_are_exhaustive(const Signature& sig, const Caps& caps);

struct GraphEnumeration {
  std::vector<LevelGraph> graphs;  // canonical, sorted by canonical form
  bool exhaustive = true;
};

// Every valid level graph of `sig` with exactly `levels` levels and exactly
// `horizontal_edges` horizontal edges, within the caps, up to isomorphism.
GraphEnumeration enumerate_level_graphs(const Signature& sig, int levels, int horizontal_edges,
                                        const Caps& caps);

struct DivisorEnumeration {
  std::vector<BoundaryDivisor> divisors;  // sorted by key
  bool exhaustive = true;
};

// Two-level graphs without horizontal edges.
DivisorEnumeration enumerate_vertical_divisors(const Signature& sig, const Caps& caps = {});

// The irreducible horizontal divisor (g >= 1) followed by every separating one,
// found by splitting the signature into two sides joined by a simple-pole edge.
std::vector<BoundaryDivisor> enumerate_horizontal_divisors(const Signature& sig);

}  // namespace strata
