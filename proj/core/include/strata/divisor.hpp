#pragma once

#include <optional>
#include <string>

#include "strata/components.hpp"
#include "strata/level_graph.hpp"

namespace strata {

enum class DivisorKind { Vertical, HorizontalIrreducible, HorizontalSeparating };

const char* to_string(DivisorKind kind) noexcept;

// (#levels - 1) + #horizontal edges.
int codimension(const LevelGraph& graph);

struct Classification {
  std::optional<DivisorKind> kind;  // empty: not a divisor
  int codimension = 0;
};

Classification classify(const LevelGraph& graph);

// Extra data a coarse graph cannot express.
struct Decoration {
  // Genus-1 irreducible horizontal divisors: the index of the component.
  std::optional<IndexClass> index;
  // A genus-1 vertex lying in the component of H_1(m, -m) with this rotation
  // number (index-walk divisors).
  std::optional<int> vertex_rotation;
  // Genus >= 2 irreducible horizontal divisor, known to be irreducible.
  bool irreducible_by_classification = false;

  // Suffix appended to the canonical form to form a node key; empty when
  // there is no decoration.
  std::string key_suffix() const;
};

struct BoundaryDivisor {
  LevelGraph graph;  // canonically relabeled
  DivisorKind kind = DivisorKind::Vertical;
  Decoration decoration;

  // canonical_form(graph) + decoration suffix.
  std::string key() const;
};

// Validates, classifies and canonically relabels. Throws NotADivisor when the
// graph has codimension != 1.
BoundaryDivisor make_divisor(const LevelGraph& graph, const Signature& sig,
                             Decoration decoration = {});

}  // namespace strata
