#include "strata/divisor.hpp"

#include <algorithm>

#include "strata/canonical.hpp"

namespace strata {

const char* to_string(DivisorKind kind) noexcept {
  switch (kind) {
    case DivisorKind::Vertical: return "vertical";
    case DivisorKind::HorizontalIrreducible: return "horizontal-irreducible";
    case DivisorKind::HorizontalSeparating: return "horizontal-separating";
  }
  return "?";
}

int codimension(const LevelGraph& graph) {
  return graph.level_count() - 1 + graph.horizontal_edge_count();
}

Classification classify(const LevelGraph& graph) {
  Classification c;
  c.codimension = codimension(graph);
  if (c.codimension != 1) return c;
  if (graph.level_count() == 2) {
    c.kind = DivisorKind::Vertical;
  } else {
    const auto it = std::find_if(graph.edges.begin(), graph.edges.end(),
                                 [](const Edge& e) { return e.horizontal(); });
    c.kind = it->loop() ? DivisorKind::HorizontalIrreducible : DivisorKind::HorizontalSeparating;
  }
  return c;
}

std::string Decoration::key_suffix() const {
  std::string s;
  if (index) s += "#I" + std::to_string(index->canonical()) + "/" + std::to_string(index->modulus());
  if (vertex_rotation) s += "#R" + std::to_string(*vertex_rotation);
  return s;
}

std::string BoundaryDivisor::key() const { return canonical_form(graph) + decoration.key_suffix(); }

BoundaryDivisor make_divisor(const LevelGraph& graph, const Signature& sig, Decoration decoration) {
  validate(graph, sig);
  const auto c = classify(graph);
  if (!c.kind) {
    throw Error(ErrorCode::NotADivisor,
                "graph has codimension " + std::to_string(c.codimension));
  }
  return BoundaryDivisor{canonical_graph(graph), *c.kind, std::move(decoration)};
}

}  // namespace strata
