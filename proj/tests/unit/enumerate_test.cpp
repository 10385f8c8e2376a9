#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "strata/canonical.hpp"
#include "strata/enumerate.hpp"
#include "test_support.hpp"

namespace strata {
namespace {

using test::E;
using test::graph;
using test::sig;

// Every two-level graph without horizontal edges, found by trying all level
// assignments, edge multiplicities, genera, leg positions and enhancements up
// to a bound, keeping the valid ones and merging isomorphic copies.
std::vector<LevelGraph> brute_vertical(const Signature& s, int max_vertices) {
  std::vector<LevelGraph> reps;
  const int g = s.genus();
  int neg = 0;
  for (int m : s.orders()) neg += m < 0 ? -m : 0;
  const int max_upper = std::max(0, 2 * g - 2 + neg);
  for (int nv = 2; nv <= max_vertices; ++nv) {
    for (int mask = 1; mask + 1 < (1 << nv); ++mask) {
      if (!(mask & 1)) continue;  // vertex 0 on top
      LevelGraph base;
      for (int v = 0; v < nv; ++v) base.vertices.push_back({0, (mask >> v) & 1 ? 0 : -1});
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < nv; ++u) {
        for (int w = 0; w < nv; ++w) {
          if (base.vertices[u].level == 0 && base.vertices[w].level == -1) pairs.emplace_back(u, w);
        }
      }
      const int max_e = g + nv - 1;
      std::vector<int> mult(pairs.size(), 0);
      std::function<void(std::size_t, int)> edges = [&](std::size_t i, int used) {
        if (i == pairs.size()) {
          LevelGraph shape = base;
          for (std::size_t p = 0; p < pairs.size(); ++p) {
            for (int k = 0; k < mult[p]; ++k) shape.edges.push_back({{pairs[p].first, 0}, {pairs[p].second, -2}});
          }
          const int h1 = shape.edge_count() - nv + 1;
          if (h1 < 0 || h1 > g) return;
          std::function<void(int, int)> genera = [&](int v, int left) {
            if (v == nv) {
              if (left) return;
              std::function<void(int)> legs = [&](int p) {
                if (p == s.size()) {
                  std::function<void(int)> orders = [&](int e) {
                    if (e == shape.edge_count()) {
                      if (!is_valid(shape, s)) return;
                      for (const auto& r : reps) {
                        if (test::brute_isomorphic(r, shape)) return;
                      }
                      reps.push_back(shape);
                      return;
                    }
                    for (int o = 0; o <= max_upper; ++o) {
                      shape.edges[e].a.order = o;
                      shape.edges[e].b.order = -2 - o;
                      orders(e + 1);
                    }
                  };
                  orders(0);
                  return;
                }
                for (int v2 = 0; v2 < nv; ++v2) {
                  shape.legs.push_back({p + 1, s.order(p + 1), v2});
                  legs(p + 1);
                  shape.legs.pop_back();
                }
              };
              legs(0);
              return;
            }
            for (int k = 0; k <= left; ++k) {
              shape.vertices[v].genus = k;
              genera(v + 1, left - k);
            }
          };
          genera(0, g - h1);
          return;
        }
        for (int k = 0; used + k <= max_e; ++k) {
          mult[i] = k;
          edges(i + 1, used + k);
        }
        mult[i] = 0;
      };
      edges(0, 0);
    }
  }
  return reps;
}

class VerticalOracle : public ::testing::TestWithParam<Signature> {};

TEST_P(VerticalOracle, MatchesBruteForce) {
  const auto& s = GetParam();
  const auto found = enumerate_vertical_divisors(s);
  ASSERT_TRUE(found.exhaustive);
  const auto brute = brute_vertical(s, 2 * s.genus() - 2 + s.size());
  ASSERT_EQ(found.divisors.size(), brute.size());
  for (const auto& b : brute) {
    bool hit = false;
    for (const auto& d : found.divisors) hit |= test::brute_isomorphic(d.graph, b);
    EXPECT_TRUE(hit) << canonical_form(b);
  }
}

INSTANTIATE_TEST_SUITE_P(Strata, VerticalOracle,
                         ::testing::Values(sig(2, {1, 1}), sig(2, {2}), sig(1, {2, -1, -1}), sig(1, {3, -1, -2}),
                                           sig(0, {1, -1, -1, -1}), sig(0, {2, -1, -1, -1, -1}),
                                           sig(1, {2, -2}), sig(2, {3, -1})));

TEST(EnumerateVertical, MergeZeroesShapeIsPresent) {
  const auto s = sig(2, {1, 1});
  const auto want = canonical_form(graph({{2, 0}, {0, -1}}, {{1, 1}, {1, 1}}, {{0, 2, 1, -4}}));
  bool hit = false;
  for (const auto& d : enumerate_vertical_divisors(s).divisors) hit |= canonical_form(d.graph) == want;
  EXPECT_TRUE(hit);
}

TEST(EnumerateVertical, AllGenusZeroTwoEdgeDivisor) {
  const auto s = sig(1, {2, -1, -1});
  const auto want = canonical_form(graph({{0, 0}, {0, -1}}, {{2, 1}, {-1, 0}, {-1, 0}}, {{0, 0, 1, -2}, {0, 0, 1, -2}}));
  bool hit = false;
  for (const auto& d : enumerate_vertical_divisors(s).divisors) hit |= canonical_form(d.graph) == want;
  EXPECT_TRUE(hit);
}

TEST(EnumerateVertical, GenusZeroFourPointsHasThree) {
  EXPECT_EQ(enumerate_vertical_divisors(sig(0, {1, -1, -1, -1})).divisors.size(), 3u);
}

TEST(EnumerateVertical, SmallCapsAreFlagged) {
  const auto found = enumerate_vertical_divisors(sig(2, {1, 1}), Caps{2, 2});
  EXPECT_FALSE(found.exhaustive);
  for (const auto& d : found.divisors) {
    EXPECT_LE(d.graph.vertex_count(), 2);
    EXPECT_LE(d.graph.edge_count(), 2);
  }
}

TEST(EnumerateVertical, Deterministic) {
  const auto s = sig(0, {1, 1, -1, -1, -1, -1});
  const auto a = enumerate_vertical_divisors(s);
  const auto b = enumerate_vertical_divisors(s);
  ASSERT_EQ(a.divisors.size(), b.divisors.size());
  for (std::size_t i = 0; i < a.divisors.size(); ++i) EXPECT_EQ(a.divisors[i].key(), b.divisors[i].key());
  for (std::size_t i = 1; i < a.divisors.size(); ++i) EXPECT_LT(a.divisors[i - 1].key(), a.divisors[i].key());
}

TEST(EnumerateHorizontal, HolomorphicHasOnlyTheIrreducible) {
  for (const auto& s : {sig(2, {1, 1}), sig(2, {2}), sig(3, {4}), sig(3, {2, 2}), sig(3, {1, 1, 1, 1})}) {
    const auto found = enumerate_horizontal_divisors(s);
    ASSERT_EQ(found.size(), 1u) << s.to_string();
    EXPECT_EQ(found[0].kind, DivisorKind::HorizontalIrreducible);
    EXPECT_TRUE(found[0].decoration.irreducible_by_classification);
  }
}

TEST(EnumerateHorizontal, UnstableSideIsDropped) {
  // the only parity-admissible split puts the simple pole alone on a genus-0 side
  const auto found = enumerate_horizontal_divisors(sig(1, {3, -1, -2}));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].kind, DivisorKind::HorizontalIrreducible);
  EXPECT_FALSE(is_valid(graph({{0, 0}, {1, 0}}, {{3, 1}, {-1, 0}, {-2, 1}}, {{0, -1, 1, -1}}), sig(1, {3, -1, -2})));
}

TEST(EnumerateHorizontal, SeparatingSplit) {
  const auto s = sig(1, {3, 1, -2, -2});
  const auto found = enumerate_horizontal_divisors(s);
  const auto want = canonical_form(graph({{0, 0}, {1, 0}}, {{3, 1}, {1, 0}, {-2, 0}, {-2, 1}}, {{0, -1, 1, -1}}));
  bool hit = false;
  for (const auto& d : found) hit |= d.kind == DivisorKind::HorizontalSeparating && canonical_form(d.graph) == want;
  EXPECT_TRUE(hit);
}

TEST(EnumerateHorizontal, GenusZeroHasNoIrreducible) {
  const auto found = enumerate_horizontal_divisors(sig(0, {2, -1, -1, -1, -1}));
  for (const auto& d : found) EXPECT_EQ(d.kind, DivisorKind::HorizontalSeparating);
}

// Separating splits by brute force over assignments of points to two sides.
TEST(EnumerateHorizontal, SeparatingMatchesBruteForce) {
  for (const auto& s : {sig(1, {3, 1, -2, -2}), sig(2, {3, 3, -2, -2}), sig(0, {2, -1, -1, -1, -1}),
                        sig(0, {1, 1, -1, -1, -1, -1}), sig(2, {2, 1, -1})}) {
    std::vector<LevelGraph> reps;
    const int n = s.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int g1 = 0; g1 <= s.genus(); ++g1) {
        LevelGraph g;
        g.vertices = {{g1, 0}, {s.genus() - g1, 0}};
        for (int p = 0; p < n; ++p) g.legs.push_back({p + 1, s.order(p + 1), (mask >> p) & 1});
        g.edges.push_back({{0, -1}, {1, -1}});
        if (!is_valid(g, s)) continue;
        bool seen = false;
        for (const auto& r : reps) seen |= test::brute_isomorphic(r, g);
        if (!seen) reps.push_back(g);
      }
    }
    int separating = 0;
    for (const auto& d : enumerate_horizontal_divisors(s)) separating += d.kind == DivisorKind::HorizontalSeparating;
    EXPECT_EQ(separating, static_cast<int>(reps.size())) << s.to_string();
  }
}

class EnumerationInvariants : public ::testing::TestWithParam<Signature> {};

TEST_P(EnumerationInvariants, OutputsValidateAndAreDistinct) {
  const auto& s = GetParam();
  for (auto [levels, horizontal] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{3, 0}, std::pair{2, 1}, std::pair{1, 2}}) {
    const auto found = enumerate_level_graphs(s, levels, horizontal, Caps{});
    std::set<std::string> forms;
    for (const auto& g : found.graphs) {
      EXPECT_TRUE(is_valid(g, s)) << canonical_form(g);
      EXPECT_EQ(g.level_count(), levels);
      EXPECT_EQ(g.horizontal_edge_count(), horizontal);
      EXPECT_TRUE(forms.insert(canonical_form(g)).second);
      EXPECT_EQ(g.edge_count() - g.vertex_count() + 1 + [&] {
        int sum = 0;
        for (const auto& v : g.vertices) sum += v.genus;
        return sum;
      }(), s.genus());
    }
  }
}

TEST_P(EnumerationInvariants, GenusZeroTopVerticesCarryPoles) {
  const auto& s = GetParam();
  for (const auto& d : enumerate_vertical_divisors(s).divisors) {
    for (int v : d.graph.vertices_at_level(0)) {
      if (d.graph.vertices[v].genus) continue;
      bool pole = false;
      for (const auto& leg : d.graph.legs) pole |= leg.vertex == v && leg.order < 0;
      EXPECT_TRUE(pole) << d.key();
    }
  }
}

TEST_P(EnumerationInvariants, TwoVertexGenusZeroDivisorsHaveValenceFour) {
  const auto& s = GetParam();
  if (projective_dimension(s) < 2) return;
  for (const auto& d : enumerate_vertical_divisors(s).divisors) {
    const auto& g = d.graph;
    if (g.vertex_count() != 2 || g.vertices[0].genus || g.vertices[1].genus) continue;
    EXPECT_GE(std::max(g.valence(0), g.valence(1)), 4) << d.key();
  }
}

TEST_P(EnumerationInvariants, HolomorphicHasNoSeparating) {
  const auto& s = GetParam();
  if (!s.holomorphic()) return;
  for (const auto& d : enumerate_horizontal_divisors(s)) EXPECT_NE(d.kind, DivisorKind::HorizontalSeparating);
}

INSTANTIATE_TEST_SUITE_P(Strata, EnumerationInvariants,
                         ::testing::Values(sig(2, {2}), sig(2, {1, 1}), sig(1, {2, -1, -1}), sig(1, {3, -1, -2}),
                                           sig(0, {2, -1, -1, -1, -1}), sig(0, {1, 1, -1, -1, -1, -1}), sig(3, {4}),
                                           sig(3, {2, 2}), sig(1, {4, 4, -8}), sig(2, {2, 1, -1}), sig(1, {0, 0})));

// A two-vertex divisor whose vertices both have genus 1 can have valence 3 at
// most; the valence-4 statement therefore needs its genus-0 premise.
TEST(EnumerationInvariants, ValenceFourNeedsGenusZero) {
  const auto s = sig(2, {2});
  const auto g = graph({{1, 0}, {1, -1}}, {{2, 1}}, {{0, 0, 1, -2}});
  ASSERT_TRUE(is_valid(g, s));
  EXPECT_LT(std::max(g.valence(0), g.valence(1)), 4);
}

}  // namespace
}  // namespace strata
