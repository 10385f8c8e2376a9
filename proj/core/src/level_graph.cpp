#include "strata/level_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "strata/union_find.hpp"

namespace strata {

namespace {

std::string vertex_name(int v) { return "vertex " + std::to_string(v); }
std::string edge_name(int e) { return "edge " + std::to_string(e); }

}  // namespace

int LevelGraph::level_count() const {
  std::set<int> levels;
  for (const auto& v : vertices) levels.insert(v.level);
  return static_cast<int>(levels.size());
}

int LevelGraph::horizontal_edge_count() const noexcept {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [](const Edge& e) { return e.horizontal(); }));
}

int LevelGraph::first_betti() const noexcept { return edge_count() - vertex_count() + 1; }

int LevelGraph::total_genus() const noexcept {
  int g = first_betti();
  for (const auto& v : vertices) g += v.genus;
  return g;
}

int LevelGraph::valence(int v) const {
  int val = 0;
  for (const auto& leg : legs) val += leg.vertex == v;
  for (const auto& e : edges) val += (e.a.vertex == v) + (e.b.vertex == v);
  return val;
}

std::vector<int> LevelGraph::incident_orders(int v) const {
  std::vector<int> out;
  for (const auto& leg : legs) {
    if (leg.vertex == v) out.push_back(leg.order);
  }
  for (const auto& e : edges) {
    if (e.a.vertex == v) out.push_back(e.a.order);
    if (e.b.vertex == v) out.push_back(e.b.order);
  }
  return out;
}

std::vector<int> LevelGraph::vertices_at_level(int level) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices[v].level == level) out.push_back(v);
  }
  return out;
}

int LevelGraph::bottom_level() const {
  int low = 0;
  for (const auto& v : vertices) low = std::min(low, v.level);
  return low;
}

void normalize_levels(LevelGraph& graph) {
  std::set<int, std::greater<>> levels;
  for (const auto& v : graph.vertices) levels.insert(v.level);
  std::map<int, int> relabel;
  int next = 0;
  for (int l : levels) relabel[l] = next--;
  for (auto& v : graph.vertices) v.level = relabel[v.level];
}

std::optional<Error> find_violation(const LevelGraph& graph, const Signature& sig) {
  const int nv = graph.vertex_count();
  if (nv == 0) return Error(ErrorCode::MalformedGraph, "graph has no vertices");
  for (int v = 0; v < nv; ++v) {
    if (graph.vertices[v].genus < 0) {
      return Error(ErrorCode::MalformedGraph, vertex_name(v) + " has negative genus", v);
    }
    if (graph.vertices[v].level > 0) {
      return Error(ErrorCode::LevelsNotNormalized, vertex_name(v) + " sits above level 0", v);
    }
  }
  for (const auto& leg : graph.legs) {
    if (leg.vertex < 0 || leg.vertex >= nv) {
      return Error(ErrorCode::MalformedGraph,
                   "leg " + std::to_string(leg.point) + " points at a missing vertex");
    }
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.a.vertex < 0 || edge.a.vertex >= nv || edge.b.vertex < 0 || edge.b.vertex >= nv) {
      return Error(ErrorCode::MalformedGraph, edge_name(e) + " points at a missing vertex", e);
    }
  }

  // legs partition the labeled points of the signature
  if (graph.legs.size() != static_cast<std::size_t>(sig.size())) {
    return Error(ErrorCode::LegMismatch, "graph has " + std::to_string(graph.legs.size()) +
                                             " legs, signature has " +
                                             std::to_string(sig.size()) + " points");
  }
  std::vector<bool> seen(sig.size() + 1, false);
  for (const auto& leg : graph.legs) {
    if (leg.point < 1 || leg.point > sig.size() || seen[leg.point]) {
      return Error(ErrorCode::LegMismatch, "leg label " + std::to_string(leg.point) +
                                               " is out of range or repeated");
    }
    seen[leg.point] = true;
    if (leg.order != sig.order(leg.point)) {
      return Error(ErrorCode::LegMismatch, "leg " + std::to_string(leg.point) + " has order " +
                                               std::to_string(leg.order) + ", signature says " +
                                               std::to_string(sig.order(leg.point)));
    }
  }

  for (int v = 0; v < nv; ++v) {
    int sum = 0;
    for (int o : graph.incident_orders(v)) sum += o;
    if (sum != 2 * graph.vertices[v].genus - 2) {
      return Error(ErrorCode::DegreeViolation,
                   vertex_name(v) + " orders sum to " + std::to_string(sum) + ", expected " +
                       std::to_string(2 * graph.vertices[v].genus - 2),
                   v);
    }
  }

  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.a.order + edge.b.order != -2) {
      return Error(ErrorCode::BadEdgeOrders, edge_name(e) + " orders do not sum to -2", e);
    }
    const int la = graph.vertices[edge.a.vertex].level;
    const int lb = graph.vertices[edge.b.vertex].level;
    if (edge.horizontal()) {
      if (la != lb) {
        return Error(ErrorCode::BadEdgeOrders,
                     edge_name(e) + " has simple poles but joins different levels", e);
      }
      continue;
    }
    const int l_up = graph.vertices[edge.upper().vertex].level;
    const int l_down = graph.vertices[edge.lower().vertex].level;
    if (edge.upper().order < 0 || l_up <= l_down) {
      return Error(ErrorCode::BadEdgeOrders,
                   edge_name(e) + " zero end must sit strictly above its pole end", e);
    }
  }

  {
    std::set<int> levels;
    for (const auto& v : graph.vertices) levels.insert(v.level);
    int expect = 0;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it, --expect) {
      if (*it != expect) {
        return Error(ErrorCode::LevelsNotNormalized, "levels are not 0, -1, ..., -k");
      }
    }
  }

  UnionFind components(static_cast<std::size_t>(nv));
  for (const auto& edge : graph.edges) {
    components.unite(static_cast<std::size_t>(edge.a.vertex), static_cast<std::size_t>(edge.b.vertex));
  }
  if (components.set_count() != 1) {
    return Error(ErrorCode::Disconnected, "graph has " + std::to_string(components.set_count()) +
                                              " connected components");
  }

  if (graph.total_genus() != sig.genus()) {
    return Error(ErrorCode::GenusMismatch, "vertex genera plus h1 give " +
                                               std::to_string(graph.total_genus()) +
                                               ", stratum genus is " + std::to_string(sig.genus()));
  }

  for (int v = 0; v < nv; ++v) {
    const int need = graph.vertices[v].genus == 0 ? 3 : 1;
    if (graph.valence(v) < need) {
      return Error(ErrorCode::Unstable, vertex_name(v) + " has valence " +
                                            std::to_string(graph.valence(v)),
                   v);
    }
  }

  for (int v = 0; v < nv; ++v) {
    const auto orders = graph.incident_orders(v);
    const auto simple = std::count(orders.begin(), orders.end(), -1);
    const bool others_holomorphic = std::all_of(orders.begin(), orders.end(),
                                                [](int o) { return o >= 0 || o == -1; });
    if (simple == 1 && others_holomorphic) {
      return Error(ErrorCode::LoneSimplePole,
                   vertex_name(v) + " has a single simple pole and no other pole", v);
    }
  }
  return std::nullopt;
}

const LevelGraph& validate(const LevelGraph& graph, const Signature& sig) {
  if (auto err = find_violation(graph, sig)) throw *err;
  return graph;
}

bool free_of_residue_conditions(const LevelGraph& graph, int v) {
  if (graph.vertices.at(v).level == 0) return true;
  return std::all_of(graph.vertices.begin(), graph.vertices.end(),
                     [](const Vertex& u) { return u.level != 0 || u.genus == 0; });
}

LevelGraph smooth_graph(const Signature& sig) {
  LevelGraph g;
  g.vertices.push_back({sig.genus(), 0});
  for (int p = 1; p <= sig.size(); ++p) g.legs.push_back({p, sig.order(p), 0});
  return g;
}

}  // namespace strata
