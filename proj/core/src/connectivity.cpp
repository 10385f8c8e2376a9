#include "strata/connectivity.hpp"

#include <cstdlib>
#include <numeric>

#include "strata/canonical.hpp"
#include "strata/moves.hpp"

namespace strata {

namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

BoundaryDivisor as_divisor(const LevelGraph& graph, const Signature& sig) {
  try {
    return make_divisor(graph, sig);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInconsistency, std::string("path step is not a divisor: ") + e.what());
  }
}

std::optional<int> loop_vertex(const LevelGraph& g) {
  for (int v : g.vertices_at_level(0)) {
    if (g.vertices[v].genus > 0) return v;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertices[v].genus > 0 && free_of_residue_conditions(g, v)) return v;
  }
  return std::nullopt;
}

struct Pulled {
  LevelGraph witness;
  LevelGraph face;
  int vertex;
};

// Pulls each candidate in turn; the first whose far face is a valid vertical
// divisor wins.
std::optional<Pulled> try_pull(const LevelGraph& g, Direction dir, const Signature& sig) {
  for (int v : g.vertices_at_level(dir == Direction::Up ? 0 : -1)) {
    try {
      LevelGraph w = pull_vertex(g, v, dir, sig);
      LevelGraph face = collapse_level_transition(w, dir == Direction::Up ? -1 : 0, sig);
      if (classify(face).kind != DivisorKind::Vertical) continue;
      return Pulled{std::move(w), std::move(face), v};
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate connect_horizontal_separating(const BoundaryDivisor& divisor, const Signature& sig) {
  require(divisor.kind == DivisorKind::HorizontalSeparating, ErrorCode::PreconditionFail,
          "connect_horizontal_separating needs a separating horizontal divisor");
  require(sig.genus() >= 1, ErrorCode::PreconditionFail, "genus 0 has no irreducible horizontal divisor");
  const auto& g = divisor.graph;
  int side = g.vertices[0].genus > g.vertices[1].genus ? 0 : 1;
  if (g.vertices[0].genus == g.vertices[1].genus) {
    int smallest = 0;
    for (const auto& leg : g.legs) {
      if (leg.point == 1) smallest = leg.vertex;
    }
    side = smallest;
  }
  auto loop = insert_horizontal_loop(g, side, sig);
  auto target = construct_dhirr(sig);
  if (!canonically_equal(loop.linked.at(1), target.graph)) {
    throw Error(ErrorCode::InternalInconsistency, "loop on a separating divisor missed the irreducible one");
  }
  Certificate cert{sig, divisor, target, {}};
  cert.steps.push_back({divisor, *loop.witness, loop.move,
                        "loop on side of genus " + std::to_string(g.vertices[side].genus) + " (" +
                            loop.parameters + ")"});
  return cert;
}

Certificate path_vertical_to_dhirr(const BoundaryDivisor& divisor, const Signature& sig) {
  require(divisor.kind == DivisorKind::Vertical, ErrorCode::PreconditionFail,
          "path_vertical_to_dhirr needs a vertical divisor");
  require(sig.genus() >= 1, ErrorCode::PreconditionFail, "genus 0 has no irreducible horizontal divisor");
  require(projective_dimension(sig) >= 2, ErrorCode::PreconditionFail,
          "projective dimension " + std::to_string(projective_dimension(sig)) + " < 2");

  const auto target = construct_dhirr(sig);
  Certificate cert{sig, divisor, target, {}};
  LevelGraph cur = divisor.graph;
  auto advance = [&](const LevelGraph& witness, const std::string& move, const std::string& audit,
                     const LevelGraph& next) {
    cert.steps.push_back({cert.steps.empty() ? divisor : as_divisor(cur, sig), witness, move, audit});
    cur = canonical_graph(next);
  };

  while (cert.length() < 4) {
    if (auto v = loop_vertex(cur)) {
      auto r = insert_horizontal_loop(cur, *v, sig);
      const bool top = cur.vertices[*v].level == 0;
      advance(*r.witness, r.move,
              std::string(top ? "positive-genus top vertex, " : "positive-genus bottom vertex, ") + r.parameters,
              r.linked.at(1));
      break;
    }
    if (cur.vertices_at_level(0).size() >= 2) {
      auto p = try_pull(cur, Direction::Up, sig);
      if (!p) throw Error(ErrorCode::InternalInconsistency, "no top vertex can be pulled up");
      advance(p->witness, "pull_vertex", "vertex " + std::to_string(p->vertex) + " up, then collapse -1/-2",
              p->face);
      continue;
    }
    if (cur.vertices_at_level(-1).size() >= 2) {
      auto p = try_pull(cur, Direction::Down, sig);
      if (!p) throw Error(ErrorCode::InternalInconsistency, "no bottom vertex can be pulled down");
      advance(p->witness, "pull_vertex", "vertex " + std::to_string(p->vertex) + " down, then collapse 0/-1",
              p->face);
      continue;
    }
    MoveResult r;
    try {
      r = collide_points(cur, sig);
    } catch (const Error& e) {
      throw Error(ErrorCode::InternalInconsistency, std::string("collision failed: ") + e.what());
    }
    advance(*r.witness, r.move, r.parameters + ", then collapse 0/-1", r.result);
  }
  if (!canonically_equal(cur, target.graph)) {
    throw Error(ErrorCode::InternalInconsistency, "path from " + canonical_form(divisor.graph) +
                                                      " did not reach the irreducible horizontal divisor");
  }
  return cert;
}

BoundaryDivisor indexed_dhirr(const Signature& sig, const IndexClass& index) {
  auto d = construct_dhirr(sig);
  d.decoration.index = index;
  return d;
}

BoundaryDivisor index_step_divisor(const Signature& sig, int point, int rotation) {
  const int m = sig.order(point);
  require(std::abs(m) > 1, ErrorCode::DegenerateSignature,
          "chain step through a point of order " + std::to_string(m));
  LevelGraph g;
  // vertex 0: genus 0 with the other legs; vertex 1: genus 1 with leg `point`
  const int rest_level = m > 1 ? 0 : -1;
  g.vertices = {{0, rest_level}, {1, m > 1 ? -1 : 0}};
  for (int p = 1; p <= sig.size(); ++p) g.legs.push_back({p, sig.order(p), p == point ? 1 : 0});
  if (m > 1) {
    g.edges.push_back({{0, m - 2}, {1, -m}});
  } else {
    g.edges.push_back({{1, -m}, {0, m - 2}});
  }
  Decoration deco;
  deco.vertex_rotation = rotation;
  return make_divisor(g, sig, deco);
}

Certificate genus1_index_walk(const Signature& sig, const IndexClass& from, const IndexClass& to) {
  require(sig.genus() == 1, ErrorCode::WrongGenus, "index walk needs genus 1");
  require(sig.size() >= 3, ErrorCode::PreconditionFail, "index walk needs at least three points");
  const int d = sig.order_gcd();
  require(from.modulus() == d && to.modulus() == d, ErrorCode::PreconditionFail,
          "index modulus must be gcd of the orders, " + std::to_string(d));
  const int r = rotation_of_index(from);
  if (r != rotation_of_index(to)) {
    throw Error(ErrorCode::RotationMismatch, "index " + std::to_string(from.index()) + " has rotation " +
                                                 std::to_string(r) + ", index " + std::to_string(to.index()) +
                                                 " has rotation " + std::to_string(rotation_of_index(to)));
  }

  Certificate cert{sig, indexed_dhirr(sig, from), indexed_dhirr(sig, to), {}};
  if (d == 1 || from.index() == to.index()) {
    cert.end = cert.start;
    return cert;
  }

  struct Hop {
    int point;
    int from;
    int to;
  };
  auto chain = [&](int index) {
    std::vector<Hop> hops;
    int cur = index;
    for (int p = 1; p <= sig.size(); ++p) {
      const int next = std::gcd(cur, std::abs(sig.order(p)));
      if (next != cur) {
        hops.push_back({p, cur, next});
        cur = next;
      }
    }
    return hops;
  };
  auto emit = [&](int hi_index, int lo_index, int point, bool descending) {
    const auto step_divisor = index_step_divisor(sig, point, lo_index);
    int genus_one = 0;
    for (const auto& leg : step_divisor.graph.legs) {
      if (leg.point == point) genus_one = leg.vertex;
    }
    auto loop = insert_horizontal_loop(step_divisor.graph, genus_one, sig);
    const auto hi = indexed_dhirr(sig, IndexClass(hi_index, d));
    const auto lo = indexed_dhirr(sig, IndexClass(lo_index, d));
    const std::string audit = "point " + std::to_string(point) + ": gcd(" + std::to_string(hi_index) + "," +
                              std::to_string(std::abs(sig.order(point))) + ") = " + std::to_string(lo_index);
    cert.steps.push_back({descending ? hi : lo, *loop.witness, loop.move, audit});
    cert.steps.push_back({step_divisor, *loop.witness, loop.move, audit});
  };

  for (const auto& hop : chain(from.index())) emit(hop.from, hop.to, hop.point, true);
  const auto back = chain(to.index());
  for (auto it = back.rbegin(); it != back.rend(); ++it) emit(it->from, it->to, it->point, false);
  if (cert.steps.empty()) cert.end = cert.start;
  return cert;
}

}  // namespace strata
