#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "strata/ends.hpp"
#include "strata/number_theory.hpp"
#include "test_support.hpp"

namespace strata {
namespace {

using test::sig;

// Cusps of X_1(N) as classes of pairs (c mod N, a mod gcd(c, N)) with
// gcd(a, c, N) = 1, up to overall sign.
long long cusps_by_pairs(int n) {
  std::set<std::pair<int, int>> seen;
  long long count = 0;
  for (int c = 0; c < n; ++c) {
    const int g = std::gcd(c, n);
    for (int a = 0; a < g; ++a) {
      if (std::gcd(std::gcd(a, c), n) != 1) continue;
      const std::pair<int, int> p{c, a};
      if (seen.count(p)) continue;
      ++count;
      seen.insert(p);
      seen.insert({(n - c) % n, (g - a) % g});
    }
  }
  return count;
}

TEST(Ends, MainTheorem) {
  for (const auto& s : {sig(2, {2}), sig(2, {1, 1}), sig(3, {4}), sig(0, {2, -1, -1, -1, -1})}) {
    const auto r = count_ends(s, ComponentLabel::single());
    EXPECT_EQ(r.count, 1);
    EXPECT_EQ(r.method, "Main Theorem");
    EXPECT_FALSE(r.verification);
  }
}

TEST(Ends, VerifiedByTheComplex) {
  const auto r = count_ends(sig(1, {2, -1, -1}), ComponentLabel::single(), true);
  ASSERT_TRUE(r.verification);
  EXPECT_TRUE(r.verification->connected);
  EXPECT_EQ(r.verification->components, 1);
  EXPECT_GT(r.verification->nodes, 1);
}

TEST(Ends, LowDimensionGenusZero) {
  EXPECT_EQ(count_ends(sig(0, {1, -1, -1, -1}), ComponentLabel::single()).count, 3);
  EXPECT_EQ(count_ends(sig(0, {1, -3}), ComponentLabel::single()).count, 0);
  EXPECT_EQ(count_ends(sig(0, {1, -1, -2}), ComponentLabel::single()).count, 0);
}

TEST(Ends, GenusOneCuspsMatchPairs) {
  for (int m = 2; m <= 12; ++m) {
    const auto s = sig(1, {m, -m});
    for (int r = 1; r < m; ++r) {
      if (m % r) continue;
      const auto rep = count_ends(s, ComponentLabel::rotation(r));
      EXPECT_EQ(rep.count, cusps_by_pairs(m / r)) << "m=" << m << " r=" << r;
      EXPECT_EQ(rep.method, "cusp oracle");
    }
  }
}

TEST(Ends, CuspOracleValues) {
  const long long want[] = {1, 2, 2, 3, 4};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(cusp_count_oracle(CuspQuery{n}), want[n - 1]);
}

TEST(Ends, CrossCheckNote) {
  const auto small = count_ends(sig(1, {4, -4}), ComponentLabel::rotation(1));
  EXPECT_EQ(small.note.find("cross-check"), std::string::npos);
  const auto big = count_ends(sig(1, {7, -7}), ComponentLabel::rotation(1));
  EXPECT_NE(big.note.find("cross-check ok"), std::string::npos);
}

TEST(Ends, HolomorphicGenusOne) {
  const auto r = count_ends(sig(1, {0}), ComponentLabel::single());
  EXPECT_EQ(r.count, 1);
}

TEST(Ends, ComponentErrors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([] { count_ends(sig(1, {1, -1}), ComponentLabel::single()); }), ErrorCode::EmptyStratum);
  EXPECT_EQ(code([] { count_ends(sig(1, {6, -6}), ComponentLabel::single()); }), ErrorCode::InconsistentComponent);
  EXPECT_EQ(code([] { count_ends(sig(1, {6, -6}), ComponentLabel::rotation(6)); }),
            ErrorCode::InconsistentComponent);
  EXPECT_EQ(code([] { count_ends(sig(2, {2}), ComponentLabel::rotation(1)); }), ErrorCode::InconsistentComponent);
  EXPECT_EQ(code([] { count_ends(sig(0, {1, -1, -1, -1}), ComponentLabel::rotation(1)); }),
            ErrorCode::InconsistentComponent);
}

TEST(Ends, Deterministic) {
  const auto s = sig(1, {3, -1, -2});
  const auto a = count_ends(s, ComponentLabel::single(), true);
  const auto b = count_ends(s, ComponentLabel::single(), true);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.note, b.note);
  EXPECT_EQ(a.verification->edges, b.verification->edges);
}

}  // namespace
}  // namespace strata
