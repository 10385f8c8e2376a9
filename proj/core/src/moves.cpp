#include "strata/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "strata/canonical.hpp"
#include "strata/union_find.hpp"

namespace strata {

namespace {

const LevelGraph& checked(const LevelGraph& graph, const Signature& sig, const char* move) {
  if (auto err = find_violation(graph, sig)) {
    throw Error(ErrorCode::ValidationFailure, std::string(move) + " produced an invalid graph: " +
                                                  err->what());
  }
  return graph;
}

// Contracts the edges flagged in `contract`. Endpoints of contracted edges
// must already share a level.
LevelGraph contract_edges(const LevelGraph& graph, const std::vector<bool>& contract) {
  const int nv = graph.vertex_count();
  UnionFind uf(static_cast<std::size_t>(nv));
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (contract[e]) {
      uf.unite(static_cast<std::size_t>(graph.edges[e].a.vertex),
               static_cast<std::size_t>(graph.edges[e].b.vertex));
    }
  }
  std::map<std::size_t, int> cluster_id;
  std::vector<int> new_id(nv);
  LevelGraph out;
  for (int v = 0; v < nv; ++v) {
    const auto root = uf.find(static_cast<std::size_t>(v));
    auto [it, inserted] = cluster_id.try_emplace(root, static_cast<int>(out.vertices.size()));
    if (inserted) out.vertices.push_back({1, graph.vertices[v].level});
    new_id[v] = it->second;
    // genus(cluster) = sum g_v + #contracted - #vertices + 1; start at 1
    out.vertices[it->second].genus += graph.vertices[v].genus - 1;
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edges[e];
    if (contract[e]) {
      out.vertices[new_id[edge.a.vertex]].genus += 1;
      continue;
    }
    out.edges.push_back({{new_id[edge.a.vertex], edge.a.order}, {new_id[edge.b.vertex], edge.b.order}});
  }
  out.legs = graph.legs;
  for (auto& leg : out.legs) leg.vertex = new_id[leg.vertex];
  normalize_levels(out);
  return out;
}

std::string describe_half_edges(const std::vector<HalfEdge>& subset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) os << ",";
    switch (subset[i].kind) {
      case HalfEdge::Kind::Leg: os << "leg#" << subset[i].index; break;
      case HalfEdge::Kind::EdgeA: os << "edge" << subset[i].index << ".a"; break;
      case HalfEdge::Kind::EdgeB: os << "edge" << subset[i].index << ".b"; break;
    }
  }
  return os.str();
}

int half_edge_order(const LevelGraph& g, const HalfEdge& h) {
  switch (h.kind) {
    case HalfEdge::Kind::Leg: return g.legs.at(h.index).order;
    case HalfEdge::Kind::EdgeA: return g.edges.at(h.index).a.order;
    case HalfEdge::Kind::EdgeB: return g.edges.at(h.index).b.order;
  }
  return 0;
}

// The undegeneration of `witness` that is not `input`, or `input` itself if
// both are. Empty if `input` is not an undegeneration of `witness`.
std::optional<LevelGraph> other_face(const LevelGraph& witness, const LevelGraph& input,
                                     const Signature& sig) {
  const std::string target = canonical_form(input);
  std::optional<std::size_t> hit;
  const auto faces = undegenerations(witness, sig);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (canonical_form(faces[i]) == target) {
      hit = i;
      break;
    }
  }
  if (!hit || faces.size() != 2) return std::nullopt;
  return faces[1 - *hit];
}

}  // namespace

MoveResult merge_zeroes(const Signature& sig) {
  int zeroes = 0;
  int zero_sum = 0;
  for (int m : sig.orders()) {
    if (m > 0) {
      ++zeroes;
      zero_sum += m;
    }
  }
  if (zeroes < 2) {
    throw Error(ErrorCode::TooFewZeroes, sig.to_string() + " has fewer than two zeroes to merge");
  }
  LevelGraph g;
  g.vertices = {{sig.genus(), 0}, {0, -1}};
  for (int p = 1; p <= sig.size(); ++p) g.legs.push_back({p, sig.order(p), sig.order(p) > 0 ? 1 : 0});
  g.edges.push_back({{0, zero_sum}, {1, -2 - zero_sum}});
  checked(g, sig, "merge_zeroes");
  MoveResult out;
  out.result = canonical_graph(g);
  out.move = "merge_zeroes";
  out.parameters = "all zeroes to a genus-0 bottom vertex";
  return out;
}

BoundaryDivisor construct_dhirr(const Signature& sig) {
  if (sig.genus() < 1) {
    throw Error(ErrorCode::GenusZero, "a genus-0 dual graph is a tree and has no loop");
  }
  LevelGraph g;
  g.vertices.push_back({sig.genus() - 1, 0});
  for (int p = 1; p <= sig.size(); ++p) g.legs.push_back({p, sig.order(p), 0});
  g.edges.push_back({{0, -1}, {0, -1}});
  checked(g, sig, "construct_dhirr");
  Decoration deco;
  deco.irreducible_by_classification = sig.genus() >= 2;
  return make_divisor(g, sig, deco);
}

MoveResult insert_horizontal_loop(const LevelGraph& graph, int v, const Signature& sig) {
  if (v < 0 || v >= graph.vertex_count()) {
    throw Error(ErrorCode::PreconditionFail, "no vertex " + std::to_string(v));
  }
  if (graph.vertices[v].genus < 1) {
    throw Error(ErrorCode::GenusTooSmall, "vertex " + std::to_string(v) + " has genus 0", v);
  }
  if (!free_of_residue_conditions(graph, v)) {
    throw Error(ErrorCode::ResidueConditionsPossible,
                "vertex " + std::to_string(v) +
                    " lies below a positive-genus top vertex; residue conditions may apply",
                v);
  }
  LevelGraph w = graph;
  w.vertices[v].genus -= 1;
  w.edges.push_back({{v, -1}, {v, -1}});
  checked(w, sig, "insert_horizontal_loop");

  MoveResult out;
  out.result = w;
  out.move = "insert_horizontal_loop";
  out.parameters = "vertex " + std::to_string(v);
  if (classify(graph).kind) {
    auto face = other_face(w, graph, sig);
    if (!face) {
      throw Error(ErrorCode::InternalInconsistency, "loop witness does not undegenerate to its input");
    }
    out.witness = w;
    out.linked = {graph, *face};
  }
  return out;
}

LevelGraph pull_vertex(const LevelGraph& graph, int v, Direction direction, const Signature& sig) {
  if (classify(graph).kind != DivisorKind::Vertical) {
    throw Error(ErrorCode::NotADivisor, "pull_vertex needs a vertical divisor");
  }
  if (v < 0 || v >= graph.vertex_count()) {
    throw Error(ErrorCode::PreconditionFail, "no vertex " + std::to_string(v));
  }
  const int level = direction == Direction::Up ? 0 : -1;
  if (graph.vertices[v].level != level) {
    throw Error(ErrorCode::PreconditionFail,
                "vertex " + std::to_string(v) + " is not on level " + std::to_string(level), v);
  }
  if (graph.vertices_at_level(level).size() < 2) {
    throw Error(ErrorCode::LoneVertexAtLevel,
                "vertex " + std::to_string(v) + " is alone on its level", v);
  }
  LevelGraph out = graph;
  if (direction == Direction::Up) {
    for (int u = 0; u < out.vertex_count(); ++u) {
      if (u != v) out.vertices[u].level -= 1;
    }
  } else {
    out.vertices[v].level = -2;
  }
  normalize_levels(out);
  return checked(out, sig, "pull_vertex");
}

LevelGraph collapse_level_transition(const LevelGraph& graph, int upper_level,
                                     const Signature& sig) {
  if (graph.level_count() < 2 || upper_level > 0 || upper_level - 1 < graph.bottom_level()) {
    throw Error(ErrorCode::NoSuchTransition,
                "no transition below level " + std::to_string(upper_level));
  }
  LevelGraph merged = graph;
  for (auto& v : merged.vertices) {
    if (v.level == upper_level - 1) v.level = upper_level;
  }
  std::vector<bool> contract(graph.edges.size(), false);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.horizontal()) continue;
    contract[e] = graph.vertices[edge.upper().vertex].level == upper_level &&
                  graph.vertices[edge.lower().vertex].level == upper_level - 1;
  }
  LevelGraph out = contract_edges(merged, contract);
  return checked(out, sig, "collapse_level_transition");
}

LevelGraph smooth_horizontal_edge(const LevelGraph& graph, int edge, const Signature& sig) {
  if (edge < 0 || edge >= graph.edge_count() || !graph.edges[edge].horizontal()) {
    throw Error(ErrorCode::PreconditionFail, "edge " + std::to_string(edge) + " is not horizontal",
                edge);
  }
  std::vector<bool> contract(graph.edges.size(), false);
  contract[edge] = true;
  return checked(contract_edges(graph, contract), sig, "smooth_horizontal_edge");
}

std::vector<LevelGraph> undegenerations(const LevelGraph& graph, const Signature& sig) {
  std::vector<LevelGraph> out;
  for (int l = 0; l - 1 >= graph.bottom_level(); --l) {
    out.push_back(collapse_level_transition(graph, l, sig));
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (graph.edges[e].horizontal()) out.push_back(smooth_horizontal_edge(graph, e, sig));
  }
  return out;
}

std::vector<HalfEdge> half_edges_at(const LevelGraph& graph, int v) {
  std::vector<HalfEdge> out;
  for (int i = 0; i < static_cast<int>(graph.legs.size()); ++i) {
    if (graph.legs[i].vertex == v) out.push_back({HalfEdge::Kind::Leg, i});
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (graph.edges[e].a.vertex == v) out.push_back({HalfEdge::Kind::EdgeA, e});
    if (graph.edges[e].b.vertex == v) out.push_back({HalfEdge::Kind::EdgeB, e});
  }
  return out;
}

std::vector<MoveResult> split_vertex(const LevelGraph& graph, int v,
                                     const std::vector<HalfEdge>& subset, const Signature& sig) {
  if (v < 0 || v >= graph.vertex_count()) {
    throw Error(ErrorCode::PreconditionFail, "no vertex " + std::to_string(v));
  }
  if (graph.vertices[v].genus != 0) {
    throw Error(ErrorCode::PreconditionFail, "points only collide on genus-0 vertices", v);
  }
  if (!free_of_residue_conditions(graph, v)) {
    throw Error(ErrorCode::ResidueConditionsPossible,
                "vertex " + std::to_string(v) + " may carry residue conditions", v);
  }
  const auto at_v = half_edges_at(graph, v);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (std::find(at_v.begin(), at_v.end(), subset[i]) == at_v.end() ||
        std::find(subset.begin(), subset.begin() + static_cast<long>(i), subset[i]) !=
            subset.begin() + static_cast<long>(i)) {
      throw Error(ErrorCode::PreconditionFail, "half-edges must be distinct and sit at vertex " +
                                                   std::to_string(v), v);
    }
  }
  if (subset.size() < 2 || at_v.size() - subset.size() < 2) {
    throw Error(ErrorCode::PreconditionFail,
                "both sides of a collision need at least two special points", v);
  }

  int collided = 0;
  for (const auto& h : subset) collided += half_edge_order(graph, h);
  const int fresh_end = -2 - collided;  // order of the new edge at the new vertex

  LevelGraph base = graph;
  const int w = base.vertex_count();
  base.vertices.push_back({0, 0});
  for (const auto& h : subset) {
    switch (h.kind) {
      case HalfEdge::Kind::Leg: base.legs[h.index].vertex = w; break;
      case HalfEdge::Kind::EdgeA: base.edges[h.index].a.vertex = w; break;
      case HalfEdge::Kind::EdgeB: base.edges[h.index].b.vertex = w; break;
    }
  }
  base.edges.push_back({{w, fresh_end}, {v, -2 - fresh_end}});
  for (auto& vert : base.vertices) vert.level *= 2;

  std::set<int> candidates;
  for (int u = 0; u < w; ++u) {
    for (int d : {-1, 0, 1}) candidates.insert(base.vertices[u].level + d);
  }

  const int want_codim = codimension(graph) + 1;
  const int first_fresh_edge = base.edge_count() - 1;
  std::vector<MoveResult> out;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    LevelGraph cand = base;
    cand.vertices[w].level = *it;
    bool oriented = true;
    for (const auto& e : cand.edges) {
      if (e.a.vertex != w && e.b.vertex != w) continue;
      const int la = cand.vertices[e.a.vertex].level;
      const int lb = cand.vertices[e.b.vertex].level;
      if (e.horizontal()) {
        oriented &= la == lb;
      } else {
        oriented &= cand.vertices[e.upper().vertex].level > cand.vertices[e.lower().vertex].level;
      }
    }
    if (!oriented) continue;
    normalize_levels(cand);
    if (codimension(cand) != want_codim || !is_valid(cand, sig)) continue;
    auto face = other_face(cand, graph, sig);
    if (!face) continue;
    MoveResult r;
    r.result = *face;
    r.witness = cand;
    r.linked = {graph, *face};
    r.move = "collide_points";
    std::ostringstream os;
    os << "vertex " << v << " {" << describe_half_edges(subset) << "} -> new vertex " << w
       << " at level " << static_cast<double>(*it) / 2.0 << ", new edge " << first_fresh_edge;
    r.parameters = os.str();
    out.push_back(std::move(r));
  }
  return out;
}

MoveResult collide_points(const LevelGraph& graph, int v, std::pair<int, int> targets,
                          const Signature& sig) {
  if (classify(graph).kind != DivisorKind::Vertical || graph.vertex_count() != 2) {
    throw Error(ErrorCode::PreconditionFail, "collide_points needs a two-vertex vertical divisor");
  }
  if (graph.vertices[0].genus != 0 || graph.vertices[1].genus != 0) {
    throw Error(ErrorCode::PreconditionFail, "both vertices must have genus 0");
  }
  if (v < 0 || v > 1) throw Error(ErrorCode::PreconditionFail, "no vertex " + std::to_string(v));
  if (graph.valence(v) < 4) {
    throw Error(ErrorCode::PreconditionFail,
                "vertex " + std::to_string(v) + " has valence " + std::to_string(graph.valence(v)) +
                    " < 4",
                v);
  }
  const auto [e, f] = targets;
  if (e == f || e < 0 || f < 0 || e >= graph.edge_count() || f >= graph.edge_count()) {
    throw Error(ErrorCode::PreconditionFail, "targets must be two distinct edges");
  }
  auto end_at_v = [&](int edge) {
    return graph.edges[edge].a.vertex == v ? HalfEdge{HalfEdge::Kind::EdgeA, edge}
                                           : HalfEdge{HalfEdge::Kind::EdgeB, edge};
  };
  auto results = split_vertex(graph, v, {end_at_v(e), end_at_v(f)}, sig);
  if (results.empty()) {
    throw Error(ErrorCode::PreconditionFail, "no admissible placement for the collided points");
  }
  std::sort(results.begin(), results.end(), [](const MoveResult& x, const MoveResult& y) {
    return canonical_form(x.result) < canonical_form(y.result);
  });
  return results.front();
}

MoveResult collide_points(const LevelGraph& graph, const Signature& sig) {
  std::optional<MoveResult> best;
  std::string best_form;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.vertex_count() != 2 || graph.valence(v) < 4) continue;
    for (int e = 0; e < graph.edge_count(); ++e) {
      for (int f = e + 1; f < graph.edge_count(); ++f) {
        MoveResult r;
        try {
          r = collide_points(graph, v, {e, f}, sig);
        } catch (const Error&) {
          continue;
        }
        std::string form = canonical_form(r.result);
        if (!best || form < best_form) {
          best = std::move(r);
          best_form = std::move(form);
        }
      }
    }
  }
  if (!best) throw Error(ErrorCode::PreconditionFail, "no admissible pair of points to collide");
  return *best;
}

}  // namespace strata
