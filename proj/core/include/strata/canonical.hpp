#pragma once

#include <string>

#include "strata/level_graph.hpp"

namespace strata {

// Isomorphism-invariant encoding of a level graph. Legs are labeled, so every
// vertex carrying a leg is fixed by any isomorphism; only leg-free vertices
// and edges are permuted. Two graphs get the same string iff they are
// isomorphic as decorated level graphs.
std::string canonical_form(const LevelGraph& graph);

// The graph relabeled into the vertex and edge order the encoding uses.
LevelGraph canonical_graph(const LevelGraph& graph);

struct CanonicalGraph {
  std::string form;
  LevelGraph graph;
};

// Both of the above in one pass.
CanonicalGraph canonicalize(const LevelGraph& graph);

inline bool canonically_equal(const LevelGraph& a, const LevelGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace strata
