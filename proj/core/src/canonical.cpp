#include "strata/canonical.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <tuple>

namespace strata {

namespace {

using Perm = std::vector<int>;  // old vertex id -> new vertex id

std::vector<std::pair<EdgeEnd, EdgeEnd>> relabeled_edges(const LevelGraph& g, const Perm& perm) {
  std::vector<std::pair<EdgeEnd, EdgeEnd>> out;
  out.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    EdgeEnd a{perm[e.a.vertex], e.a.order};
    EdgeEnd b{perm[e.b.vertex], e.b.order};
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode(const LevelGraph& g, const Perm& perm) {
  std::vector<Vertex> verts(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) verts[perm[v]] = g.vertices[v];
  std::vector<Leg> legs = g.legs;
  std::sort(legs.begin(), legs.end(), [](const Leg& x, const Leg& y) { return x.point < y.point; });

  std::ostringstream os;
  os << "V";
  for (const auto& v : verts) os << '[' << v.level << ',' << v.genus << ']';
  os << "L";
  for (const auto& leg : legs) os << '[' << leg.point << ':' << leg.order << '@' << perm[leg.vertex] << ']';
  os << "E";
  for (const auto& [a, b] : relabeled_edges(g, perm)) {
    os << '[' << a.vertex << ':' << a.order << ',' << b.vertex << ':' << b.order << ']';
  }
  return os.str();
}

// Sort key for a leg-free vertex: everything about it that does not depend on
// how the other leg-free vertices are numbered.
using VertexKey = std::tuple<int, int, std::vector<int>, std::vector<std::tuple<int, int, int>>>;

VertexKey legless_key(const LevelGraph& g, int v, const std::vector<int>& fixed_rank) {
  std::vector<int> orders = g.incident_orders(v);
  std::sort(orders.begin(), orders.end());
  std::vector<std::tuple<int, int, int>> nbrs;
  for (const auto& e : g.edges) {
    if (e.a.vertex == v) nbrs.emplace_back(fixed_rank[e.b.vertex], e.a.order, e.b.order);
    if (e.b.vertex == v) nbrs.emplace_back(fixed_rank[e.a.vertex], e.b.order, e.a.order);
  }
  std::sort(nbrs.begin(), nbrs.end());
  return {-g.vertices[v].level, g.vertices[v].genus, std::move(orders), std::move(nbrs)};
}

struct Search {
  const LevelGraph& graph;
  std::vector<int> slots;                          // new position -> old vertex
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) ranges to permute
  std::string best;
  Perm best_perm;

  void run(std::size_t group) {
    if (group == groups.size()) {
      Perm perm(slots.size());
      for (std::size_t pos = 0; pos < slots.size(); ++pos) perm[slots[pos]] = static_cast<int>(pos);
      std::string text = encode(graph, perm);
      if (best_perm.empty() || text < best) {
        best = std::move(text);
        best_perm = std::move(perm);
      }
      return;
    }
    auto [lo, hi] = groups[group];
    std::sort(slots.begin() + lo, slots.begin() + hi);
    do {
      run(group + 1);
    } while (std::next_permutation(slots.begin() + lo, slots.begin() + hi));
  }
};

std::pair<std::string, Perm> best_labeling(const LevelGraph& g) {
  const int nv = g.vertex_count();
  std::vector<int> min_leg(nv, INT_MAX);
  for (const auto& leg : g.legs) min_leg[leg.vertex] = std::min(min_leg[leg.vertex], leg.point);

  std::vector<int> legged, legless;
  for (int v = 0; v < nv; ++v) (min_leg[v] == INT_MAX ? legless : legged).push_back(v);
  std::sort(legged.begin(), legged.end(), [&](int x, int y) { return min_leg[x] < min_leg[y]; });

  std::vector<int> fixed_rank(nv, -1);
  for (std::size_t i = 0; i < legged.size(); ++i) fixed_rank[legged[i]] = static_cast<int>(i);

  std::vector<std::pair<VertexKey, int>> keyed;
  for (int v : legless) keyed.emplace_back(legless_key(g, v, fixed_rank), v);
  std::sort(keyed.begin(), keyed.end());

  Search search{g, legged, {}, {}, {}};
  std::size_t i = 0;
  while (i < keyed.size()) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    const std::size_t begin = search.slots.size();
    for (std::size_t k = i; k < j; ++k) search.slots.push_back(keyed[k].second);
    if (j - i > 1) search.groups.emplace_back(begin, search.slots.size());
    i = j;
  }
  search.run(0);
  return {std::move(search.best), std::move(search.best_perm)};
}

}  // namespace

std::string canonical_form(const LevelGraph& graph) { return best_labeling(graph).first; }

LevelGraph canonical_graph(const LevelGraph& graph) { return canonicalize(graph).graph; }

CanonicalGraph canonicalize(const LevelGraph& graph) {
  auto [form, perm] = best_labeling(graph);
  LevelGraph out;
  out.vertices.resize(graph.vertices.size());
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) out.vertices[perm[v]] = graph.vertices[v];
  out.legs = graph.legs;
  for (auto& leg : out.legs) leg.vertex = perm[leg.vertex];
  std::sort(out.legs.begin(), out.legs.end(),
            [](const Leg& x, const Leg& y) { return x.point < y.point; });
  for (const auto& [a, b] : relabeled_edges(graph, perm)) out.edges.push_back({a, b});
  return {std::move(form), std::move(out)};
}

}  // namespace strata
