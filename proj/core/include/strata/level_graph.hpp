#pragma once

#include <optional>
#include <vector>

#include "strata/error.hpp"
#include "strata/signature.hpp"

namespace strata {

struct Vertex {
  int genus = 0;
  int level = 0;  // 0 is the top level, lower levels are negative

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A marked point z_point of the stratum sitting on a vertex.
struct Leg {
  int point = 1;  // 1-based label
  int order = 0;
  int vertex = 0;

  friend bool operator==(const Leg&, const Leg&) = default;
};

struct EdgeEnd {
  int vertex = 0;
  int order = 0;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

// A node of the stable curve. The ends carry the orders of the twisted
// differential on the two branches; they always sum to -2. A vertical edge has
// order kappa - 1 >= 0 at its upper end and -kappa - 1 at its lower end; a
// horizontal edge has -1 at both ends.
struct Edge {
  EdgeEnd a;
  EdgeEnd b;

  bool horizontal() const noexcept { return a.order == -1 && b.order == -1; }
  bool loop() const noexcept { return a.vertex == b.vertex; }
  // Only meaningful for vertical edges.
  const EdgeEnd& upper() const noexcept { return a.order >= 0 ? a : b; }
  const EdgeEnd& lower() const noexcept { return a.order >= 0 ? b : a; }
  int enhancement() const noexcept { return upper().order + 1; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Decorated level graph. Vertex and edge ids are positions in the vectors.
struct LevelGraph {
  std::vector<Vertex> vertices;
  std::vector<Leg> legs;
  std::vector<Edge> edges;

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
  // Number of distinct levels.
  int level_count() const;
  int horizontal_edge_count() const noexcept;
  // #edges - #vertices + 1 (the graph is assumed connected).
  int first_betti() const noexcept;
  // Sum of vertex genera plus first Betti number.
  int total_genus() const noexcept;
  // Legs plus edge ends at v; a loop counts twice.
  int valence(int v) const;
  // Every order incident to v: leg orders then edge-end orders.
  std::vector<int> incident_orders(int v) const;
  std::vector<int> vertices_at_level(int level) const;
  // Lowest level present, e.g. -1 for a two-level graph.
  int bottom_level() const;

  friend bool operator==(const LevelGraph&, const LevelGraph&) = default;
};

// Relabels levels to {0, -1, ..., -k} preserving their order.
void normalize_levels(LevelGraph& graph);

// The first violated invariant, or nullopt if `graph` is a valid decorated
// level graph for `sig`.
std::optional<Error> find_violation(const LevelGraph& graph, const Signature& sig);

// Throws the first violation.
const LevelGraph& validate(const LevelGraph& graph, const Signature& sig);

inline bool is_valid(const LevelGraph& graph, const Signature& sig) {
  return !find_violation(graph, sig).has_value();
}

// True if no global residue condition can act on vertex v: v is at the top
// level, or every top-level vertex has genus 0 (a genus-0 top vertex always
// carries a marked pole).
bool free_of_residue_conditions(const LevelGraph& graph, int v);

// The graph of the smooth stratum: one vertex of genus g carrying every leg.
LevelGraph smooth_graph(const Signature& sig);

}  // namespace strata
