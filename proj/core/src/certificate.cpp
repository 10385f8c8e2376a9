#include "strata/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "strata/canonical.hpp"

namespace strata {

const BoundaryDivisor& Certificate::divisor(int i) const {
  if (i < 0 || i > length()) throw Error(ErrorCode::PreconditionFail, "no divisor " + std::to_string(i));
  return i == length() ? end : steps[static_cast<std::size_t>(i)].divisor;
}

namespace {

// Quotient of `w` by the edges flagged in `shrink`, with levels first mapped
// through `level_of`. Written independently of the rewrite moves.
LevelGraph quotient(const LevelGraph& w, const std::vector<bool>& shrink,
                    const std::vector<int>& level_of) {
  const int nv = w.vertex_count();
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < w.edge_count(); ++e) {
    if (!shrink[e]) continue;
    adj[w.edges[e].a.vertex].push_back(w.edges[e].b.vertex);
    adj[w.edges[e].b.vertex].push_back(w.edges[e].a.vertex);
  }
  std::vector<int> comp(nv, -1);
  std::vector<int> members;
  LevelGraph q;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    const int id = q.vertex_count();
    int genus = 0;
    int size = 0;
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      genus += w.vertices[v].genus;
      ++size;
      for (int u : adj[v]) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    q.vertices.push_back({genus - size + 1, level_of[s]});
  }
  for (int e = 0; e < w.edge_count(); ++e) {
    const auto& edge = w.edges[e];
    if (shrink[e]) {
      q.vertices[comp[edge.a.vertex]].genus += 1;
    } else {
      q.edges.push_back({{comp[edge.a.vertex], edge.a.order}, {comp[edge.b.vertex], edge.b.order}});
    }
  }
  for (const auto& leg : w.legs) q.legs.push_back({leg.point, leg.order, comp[leg.vertex]});
  std::set<int> levels;
  for (const auto& v : q.vertices) levels.insert(v.level);
  for (auto& v : q.vertices) {
    v.level = -static_cast<int>(std::distance(levels.upper_bound(v.level), levels.end()));
  }
  return q;
}

std::vector<LevelGraph> faces(const LevelGraph& w) {
  std::vector<int> levels;
  for (const auto& v : w.vertices) levels.push_back(v.level);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<LevelGraph> out;
  for (std::size_t t = 0; t + 1 < levels.size(); ++t) {
    const int hi = levels[t];
    const int lo = levels[t + 1];
    std::vector<int> level_of;
    for (const auto& v : w.vertices) level_of.push_back(v.level == lo ? hi : v.level);
    std::vector<bool> shrink;
    for (const auto& e : w.edges) {
      const int la = w.vertices[e.a.vertex].level;
      const int lb = w.vertices[e.b.vertex].level;
      shrink.push_back(!e.horizontal() && std::min(la, lb) == lo && std::max(la, lb) == hi);
    }
    out.push_back(quotient(w, shrink, level_of));
  }
  std::vector<int> same_levels;
  for (const auto& v : w.vertices) same_levels.push_back(v.level);
  for (int e = 0; e < w.edge_count(); ++e) {
    if (!w.edges[e].horizontal()) continue;
    std::vector<bool> shrink(w.edges.size(), false);
    shrink[e] = true;
    out.push_back(quotient(w, shrink, same_levels));
  }
  return out;
}

int codim_of(const LevelGraph& g) {
  std::set<int> levels;
  for (const auto& v : g.vertices) levels.insert(v.level);
  int h = 0;
  for (const auto& e : g.edges) h += e.a.order == -1 && e.b.order == -1;
  return static_cast<int>(levels.size()) - 1 + h;
}

// The order m of the single leg on the single genus-1 vertex, if that shape holds.
std::optional<int> genus_one_leg_order(const LevelGraph& g) {
  std::optional<int> vertex;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertices[v].genus == 1) {
      if (vertex) return std::nullopt;
      vertex = v;
    }
  }
  if (!vertex) return std::nullopt;
  std::optional<int> order;
  for (const auto& leg : g.legs) {
    if (leg.vertex != *vertex) continue;
    if (order) return std::nullopt;
    order = leg.order;
  }
  return order;
}

std::string check_divisor(const BoundaryDivisor& d, const Signature& sig,
                          std::optional<int>& rotation) {
  if (auto err = find_violation(d.graph, sig)) return std::string("divisor invalid: ") + err->what();
  if (codim_of(d.graph) != 1) return "divisor does not have codimension 1";
  const auto c = classify(d.graph);
  if (!c.kind || *c.kind != d.kind) return "divisor kind does not match its graph";

  const auto& deco = d.decoration;
  if (deco.index) {
    if (d.kind != DivisorKind::HorizontalIrreducible || sig.genus() != 1) {
      return "index decoration on a divisor that is not a genus-1 irreducible horizontal divisor";
    }
    const int dd = sig.order_gcd();
    if (deco.index->modulus() != dd) return "index modulus differs from gcd of the orders";
    const int r = std::gcd(deco.index->index(), dd);
    if (rotation && *rotation != r) return "index decorations have different rotation numbers";
    rotation = r;
  }
  if (deco.vertex_rotation) {
    if (d.kind != DivisorKind::Vertical) return "rotation decoration on a non-vertical divisor";
    const auto m = genus_one_leg_order(d.graph);
    if (!m) return "rotation decoration needs one genus-1 vertex with one leg";
    const int R = *deco.vertex_rotation;
    if (R < 1 || std::abs(*m) % R != 0 || R >= std::abs(*m)) {
      return "rotation " + std::to_string(R) + " is not admissible for H_1(" + std::to_string(*m) +
             "," + std::to_string(-*m) + ")";
    }
  }
  if (deco.irreducible_by_classification &&
      (d.kind != DivisorKind::HorizontalIrreducible || sig.genus() < 2)) {
    return "irreducibility flag on a divisor that is not a genus >= 2 irreducible one";
  }
  return {};
}

std::string check_adjacent(const BoundaryDivisor& a, const BoundaryDivisor& b) {
  const BoundaryDivisor* indexed = a.decoration.index ? &a : b.decoration.index ? &b : nullptr;
  const BoundaryDivisor* rotated =
      a.decoration.vertex_rotation ? &a : b.decoration.vertex_rotation ? &b : nullptr;
  if (!indexed || !rotated) return {};
  const int m = std::abs(*genus_one_leg_order(rotated->graph));
  const int J = indexed->decoration.index->index();
  if (std::gcd(J, m) != *rotated->decoration.vertex_rotation) {
    return "gcd(" + std::to_string(J) + "," + std::to_string(m) + ") differs from rotation " +
           std::to_string(*rotated->decoration.vertex_rotation);
  }
  return {};
}

VerificationReport failure(std::optional<int> step, std::string reason) {
  return VerificationReport{false, step, std::move(reason)};
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert) {
  const auto& sig = cert.signature;
  const int n = cert.length();
  if (n == 0) {
    if (cert.start.key() != cert.end.key()) return failure(std::nullopt, "empty path between distinct divisors");
  } else if (cert.steps.front().divisor.key() != cert.start.key()) {
    return failure(0, "first divisor is not the start divisor");
  }

  std::optional<int> rotation;
  for (int i = 0; i <= n; ++i) {
    if (auto why = check_divisor(cert.divisor(i), sig, rotation); !why.empty()) {
      return failure(std::min(i, std::max(0, n - 1)), why);
    }
  }

  for (int i = 0; i < n; ++i) {
    const auto& w = cert.steps[static_cast<std::size_t>(i)].witness;
    if (auto err = find_violation(w, sig)) return failure(i, std::string("witness invalid: ") + err->what());
    if (codim_of(w) != 2) return failure(i, "witness does not have codimension 2");
    std::set<std::string> face_forms;
    for (const auto& f : faces(w)) {
      if (auto err = find_violation(f, sig)) return failure(i, std::string("witness face invalid: ") + err->what());
      face_forms.insert(canonical_form(f));
    }
    const auto& from = cert.divisor(i);
    const auto& to = cert.divisor(i + 1);
    if (from.key() == to.key()) return failure(i, "step joins a divisor to itself");
    if (!face_forms.count(canonical_form(from.graph))) return failure(i, "witness does not degenerate from its divisor");
    if (!face_forms.count(canonical_form(to.graph))) return failure(i, "witness does not degenerate from the next divisor");
    if (auto why = check_adjacent(from, to); !why.empty()) return failure(i, why);
  }
  return {};
}

}  // namespace strata
