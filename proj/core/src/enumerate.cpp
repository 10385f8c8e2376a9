#include "strata/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "strata/canonical.hpp"
#include "strata/union_find.hpp"

namespace strata {

namespace {

struct PairSlot {
  int u;  // higher (or equal) level end
  int w;
  bool horizontal;
};

struct RawEdge {
  int upper;
  int lower;
  bool horizontal;
};

// Exhaustive search over labeled graphs; duplicates up to isomorphism are
// merged by canonical form at the end.
class LevelGraphSearch {
 public:
  LevelGraphSearch(const Signature& sig, int levels, int horizontal, const Caps& caps)
      : sig_(sig), levels_(levels), horizontal_(horizontal), caps_(caps) {}

  std::map<std::string, LevelGraph> run() {
    const int n = sig_.size();
    const int g = sig_.genus();
    const int max_v = std::min(caps_.max_vertices, std::max(1, 2 * g - 2 + n));
    for (int nv = levels_; nv <= max_v; ++nv) {
      std::vector<int> parts;
      compositions(nv, levels_, parts);
    }
    return std::move(found_);
  }

 private:
  // Splits nv vertices into `k` non-empty consecutive level blocks.
  void compositions(int remaining, int k, std::vector<int>& parts) {
    if (k == 1) {
      parts.push_back(remaining);
      with_levels(parts);
      parts.pop_back();
      return;
    }
    for (int first = 1; first <= remaining - (k - 1); ++first) {
      parts.push_back(first);
      compositions(remaining - first, k - 1, parts);
      parts.pop_back();
    }
  }

  void with_levels(const std::vector<int>& parts) {
    level_.clear();
    for (int l = 0; l < static_cast<int>(parts.size()); ++l) {
      for (int i = 0; i < parts[l]; ++i) level_.push_back(-l);
    }
    const int nv = static_cast<int>(level_.size());
    slots_.clear();
    for (int i = 0; i < nv; ++i) {
      for (int j = i; j < nv; ++j) {
        const bool same = level_[i] == level_[j];
        if (i == j && horizontal_ == 0) continue;
        if (same && horizontal_ == 0) continue;
        slots_.push_back({i, j, same});
      }
    }
    const int g = sig_.genus();
    min_edges_ = std::max(nv - 1, horizontal_);
    max_edges_ = std::min(caps_.max_edges, g + nv - 1);
    if (min_edges_ > max_edges_) return;
    multiplicity_.assign(slots_.size(), 0);
    choose_edges(0, 0, 0);
  }

  void choose_edges(std::size_t slot, int edges, int horiz) {
    if (slot == slots_.size()) {
      if (horiz == horizontal_ && edges >= min_edges_) with_edges();
      return;
    }
    const bool h = slots_[slot].horizontal;
    for (int k = 0; edges + k <= max_edges_ && (!h || horiz + k <= horizontal_); ++k) {
      multiplicity_[slot] = k;
      choose_edges(slot + 1, edges + k, horiz + (h ? k : 0));
    }
    multiplicity_[slot] = 0;
  }

  void with_edges() {
    const int nv = static_cast<int>(level_.size());
    edges_.clear();
    UnionFind uf(static_cast<std::size_t>(nv));
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      for (int k = 0; k < multiplicity_[s]; ++k) {
        edges_.push_back({slots_[s].u, slots_[s].w, slots_[s].horizontal});
        uf.unite(static_cast<std::size_t>(slots_[s].u), static_cast<std::size_t>(slots_[s].w));
      }
    }
    if (uf.set_count() != 1) return;
    const int h1 = static_cast<int>(edges_.size()) - nv + 1;
    const int spare = sig_.genus() - h1;
    if (spare < 0) return;

    edge_valence_.assign(nv, 0);
    horizontal_ends_.assign(nv, 0);
    for (const auto& e : edges_) {
      ++edge_valence_[e.upper];
      ++edge_valence_[e.lower];
      if (e.horizontal) {
        ++horizontal_ends_[e.upper];
        ++horizontal_ends_[e.lower];
      }
    }
    genus_.assign(nv, 0);
    choose_genera(0, spare);
  }

  void choose_genera(int v, int spare) {
    const int nv = static_cast<int>(level_.size());
    if (v == nv - 1) {
      genus_[v] = spare;
      // legs needed for stability
      int needed = 0;
      for (int u = 0; u < nv; ++u) {
        const int need = genus_[u] == 0 ? 3 : 1;
        needed += std::max(0, need - edge_valence_[u]);
      }
      if (needed > sig_.size()) return;
      leg_vertex_.assign(sig_.size(), 0);
      leg_count_.assign(nv, 0);
      leg_sum_.assign(nv, 0);
      place_legs(0);
      return;
    }
    for (int k = 0; k <= spare; ++k) {
      genus_[v] = k;
      choose_genera(v + 1, spare - k);
    }
  }

  void place_legs(int point_index) {
    const int nv = static_cast<int>(level_.size());
    if (point_index == sig_.size()) {
      for (int u = 0; u < nv; ++u) {
        const int need = genus_[u] == 0 ? 3 : 1;
        if (edge_valence_[u] + leg_count_[u] < need) return;
      }
      solve_orders();
      return;
    }
    const int order = sig_.orders()[point_index];
    for (int u = 0; u < nv; ++u) {
      leg_vertex_[point_index] = u;
      ++leg_count_[u];
      leg_sum_[u] += order;
      place_legs(point_index + 1);
      --leg_count_[u];
      leg_sum_[u] -= order;
    }
  }

  // Vertices are numbered top level first, so every edge reaching v from above
  // has its enhancement fixed before v is processed.
  void solve_orders() {
    upper_order_.assign(edges_.size(), -1);
    assign_vertex(0);
  }

  void assign_vertex(int v) {
    const int nv = static_cast<int>(level_.size());
    if (v == nv) {
      emit();
      return;
    }
    int target = 2 * genus_[v] - 2 - leg_sum_[v] + horizontal_ends_[v];
    std::vector<std::size_t> down;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].horizontal) continue;
      if (edges_[e].lower == v) target += upper_order_[e] + 2;
      if (edges_[e].upper == v) down.push_back(e);
    }
    if (down.empty()) {
      if (target == 0) assign_vertex(v + 1);
      return;
    }
    if (target < 0) return;
    distribute(v, down, 0, target);
  }

  void distribute(int v, const std::vector<std::size_t>& down, std::size_t i, int remaining) {
    if (i + 1 == down.size()) {
      upper_order_[down[i]] = remaining;
      assign_vertex(v + 1);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      upper_order_[down[i]] = k;
      distribute(v, down, i + 1, remaining - k);
    }
  }

  void emit() {
    LevelGraph g;
    for (std::size_t v = 0; v < level_.size(); ++v) g.vertices.push_back({genus_[v], level_[v]});
    for (int p = 0; p < sig_.size(); ++p) g.legs.push_back({p + 1, sig_.orders()[p], leg_vertex_[p]});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].horizontal) {
        g.edges.push_back({{edges_[e].upper, -1}, {edges_[e].lower, -1}});
      } else {
        const int a = upper_order_[e];
        g.edges.push_back({{edges_[e].upper, a}, {edges_[e].lower, -2 - a}});
      }
    }
    if (!is_valid(g, sig_)) return;
    auto c = canonicalize(g);
    found_.try_emplace(std::move(c.form), std::move(c.graph));
  }

  const Signature& sig_;
  int levels_;
  int horizontal_;
  Caps caps_;

  std::vector<int> level_;
  std::vector<PairSlot> slots_;
  std::vector<int> multiplicity_;
  int min_edges_ = 0;
  int max_edges_ = 0;
  std::vector<RawEdge> edges_;
  std::vector<int> edge_valence_;
  std::vector<int> horizontal_ends_;
  std::vector<int> genus_;
  std::vector<int> leg_vertex_;
  std::vector<int> leg_count_;
  std::vector<int> leg_sum_;
  std::vector<int> upper_order_;
  std::map<std::string, LevelGraph> found_;
};

LevelGraph irreducible_horizontal_graph(const Signature& sig) {
  LevelGraph g;
  g.vertices.push_back({sig.genus() - 1, 0});
  for (int p = 1; p <= sig.size(); ++p) g.legs.push_back({p, sig.order(p), 0});
  g.edges.push_back({{0, -1}, {0, -1}});
  return g;
}

}  // namespace

bool caps_are_exhaustive(const Signature& sig, const Caps& caps) {
  const int n = sig.size();
  const int g = sig.genus();
  return caps.max_vertices >= 2 * g - 2 + n && caps.max_edges >= 3 * g - 3 + n;
}

GraphEnumeration enumerate_level_graphs(const Signature& sig, int levels, int horizontal_edges,
                                        const Caps& caps) {
  if (levels < 1 || horizontal_edges < 0) {
    throw Error(ErrorCode::PreconditionFail, "need at least one level and no negative edge count");
  }
  if (caps.max_vertices < 1 || caps.max_edges < 0) {
    throw Error(ErrorCode::PreconditionFail, "caps must be positive");
  }
  GraphEnumeration out;
  for (auto& [form, graph] : LevelGraphSearch(sig, levels, horizontal_edges, caps).run()) {
    out.graphs.push_back(std::move(graph));
  }
  out.exhaustive = caps_are_exhaustive(sig, caps);
  return out;
}

DivisorEnumeration enumerate_vertical_divisors(const Signature& sig, const Caps& caps) {
  auto graphs = enumerate_level_graphs(sig, 2, 0, caps);
  DivisorEnumeration out;
  out.exhaustive = graphs.exhaustive;
  for (auto& g : graphs.graphs) {
    out.divisors.push_back(BoundaryDivisor{std::move(g), DivisorKind::Vertical, {}});
  }
  return out;
}

std::vector<BoundaryDivisor> enumerate_horizontal_divisors(const Signature& sig) {
  std::vector<BoundaryDivisor> out;
  if (sig.genus() >= 1) {
    const auto g = irreducible_horizontal_graph(sig);
    if (is_valid(g, sig)) {
      Decoration deco;
      deco.irreducible_by_classification = sig.genus() >= 2;
      out.push_back(make_divisor(g, sig, deco));
    }
  }

  std::map<std::string, BoundaryDivisor> separating;
  const int n = sig.size();
  // point 1 always lies on the first side, so each unordered split is seen once
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {
    int sum = 0;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) sum += sig.orders()[p];
    }
    if ((sum + 1) % 2 != 0) continue;
    const int g1 = (sum + 1) / 2;
    const int g2 = sig.genus() - g1;
    if (g1 < 0 || g2 < 0) continue;
    LevelGraph g;
    g.vertices = {{g1, 0}, {g2, 0}};
    for (int p = 0; p < n; ++p) g.legs.push_back({p + 1, sig.orders()[p], (mask & (1u << p)) ? 0 : 1});
    g.edges.push_back({{0, -1}, {1, -1}});
    if (!is_valid(g, sig)) continue;
    auto d = make_divisor(g, sig);
    separating.try_emplace(d.key(), std::move(d));
  }
  for (auto& [key, d] : separating) out.push_back(std::move(d));
  return out;
}

}  // namespace strata
