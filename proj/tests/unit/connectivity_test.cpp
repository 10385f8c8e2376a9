#include <gtest/gtest.h>

#include "strata/canonical.hpp"
#include "strata/complex.hpp"
#include "strata/connectivity.hpp"
#include "strata/enumerate.hpp"
#include "strata/moves.hpp"
#include "test_support.hpp"

namespace strata {
namespace {

using test::graph;
using test::sig;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(Separating, LoopGoesOnTheLargerGenusSide) {
  const auto s = sig(2, {2, 1, -1});
  for (const auto& d : enumerate_horizontal_divisors(s)) {
    if (d.kind != DivisorKind::HorizontalSeparating) continue;
    const auto c = connect_horizontal_separating(d, s);
    ASSERT_EQ(c.length(), 1);
    EXPECT_TRUE(verify_certificate(c).ok);
    const auto& w = c.steps[0].witness;
    int loop_vertex = -1;
    for (const auto& e : w.edges) {
      if (e.loop()) loop_vertex = e.a.vertex;
    }
    ASSERT_GE(loop_vertex, 0);
    const int other = 1 - loop_vertex;
    EXPECT_GE(w.vertices[loop_vertex].genus + 1, w.vertices[other].genus);
    EXPECT_EQ(c.end.kind, DivisorKind::HorizontalIrreducible);
  }
}

TEST(Separating, TieTakesTheSideOfPointOne) {
  const auto s = sig(2, {3, 3, -2, -2});
  bool seen_tie = false;
  for (const auto& d : enumerate_horizontal_divisors(s)) {
    if (d.kind != DivisorKind::HorizontalSeparating) continue;
    if (d.graph.vertices[0].genus != d.graph.vertices[1].genus) continue;
    seen_tie = true;
    const auto c = connect_horizontal_separating(d, s);
    const auto& w = c.steps[0].witness;
    int point_one = -1;
    for (const auto& leg : w.legs) {
      if (leg.point == 1) point_one = leg.vertex;
    }
    bool loop_at_one = false;
    for (const auto& e : w.edges) loop_at_one |= e.loop() && e.a.vertex == point_one;
    EXPECT_TRUE(loop_at_one);
  }
  EXPECT_TRUE(seen_tie);
}

class VerticalPaths : public ::testing::TestWithParam<Signature> {};

TEST_P(VerticalPaths, ReachDhirrWithinFourSteps) {
  const auto& s = GetParam();
  const auto dhirr = construct_dhirr(s);
  for (const auto& d : enumerate_vertical_divisors(s).divisors) {
    const auto c = path_vertical_to_dhirr(d, s);
    EXPECT_LE(c.length(), 4);
    EXPECT_EQ(canonical_form(c.end.graph), canonical_form(dhirr.graph));
    const auto r = verify_certificate(c);
    EXPECT_TRUE(r.ok) << d.key() << ": " << r.reason;
  }
}

INSTANTIATE_TEST_SUITE_P(Strata, VerticalPaths,
                         ::testing::Values(sig(2, {2}), sig(2, {1, 1}), sig(1, {2, -1, -1}), sig(1, {3, -1, -2}),
                                           sig(3, {4}), sig(2, {2, 1, -1}), sig(1, {2, 1, -1, -2})));

TEST(IndexWalk, ThreeToOneModFour) {
  const auto s = sig(1, {4, 4, -8});
  const auto c = genus1_index_walk(s, IndexClass(3, 4), IndexClass(1, 4));
  EXPECT_EQ(c.length(), 2);
  EXPECT_TRUE(verify_certificate(c).ok);
  EXPECT_EQ(c.start.decoration.index->index(), 3);
  EXPECT_EQ(c.end.decoration.index->index(), 1);
}

TEST(IndexWalk, EqualIndicesGiveEmptyWalk) {
  const auto s = sig(1, {4, 4, -8});
  const auto c = genus1_index_walk(s, IndexClass(2, 4), IndexClass(2, 4));
  EXPECT_EQ(c.length(), 0);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(IndexWalk, Refusals) {
  EXPECT_EQ(code_of([] { genus1_index_walk(sig(1, {4, 4, -8}), IndexClass(1, 4), IndexClass(2, 4)); }),
            ErrorCode::RotationMismatch);
  EXPECT_EQ(code_of([] { genus1_index_walk(sig(2, {2}), IndexClass(1, 2), IndexClass(1, 2)); }),
            ErrorCode::WrongGenus);
}

TEST(IndexWalk, AllSameRotationPairsVerify) {
  for (const auto& s : {sig(1, {4, 4, -8}), sig(1, {6, 6, -12}), sig(1, {6, 3, -9})}) {
    const int d = s.order_gcd();
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        IndexClass a(i, d), b(j, d);
        if (rotation_of_index(a) != rotation_of_index(b)) continue;
        const auto c = genus1_index_walk(s, a, b);
        const auto r = verify_certificate(c);
        EXPECT_TRUE(r.ok) << s.to_string() << " " << i << "->" << j << ": " << r.reason;
      }
    }
  }
}

TEST(Complex, GenusZeroFourPointsIsThreeIsolatedNodes) {
  const auto c = build_boundary_complex(sig(0, {1, -1, -1, -1}));
  EXPECT_EQ(c.nodes.size(), 3u);
  EXPECT_TRUE(c.edges.empty());
  EXPECT_EQ(c.report.components, 3);
  EXPECT_FALSE(c.report.connected);
}

TEST(Complex, CompactStratumHasNoBoundary) {
  for (const auto& s : {sig(0, {-1, -1}), sig(0, {1, -3})}) {
    const auto c = build_boundary_complex(s);
    EXPECT_TRUE(c.nodes.empty());
    EXPECT_TRUE(c.report.no_boundary);
  }
}

TEST(Complex, OracleRefusesIncompleteCaps) {
  EXPECT_EQ(code_of([] { build_boundary_complex(sig(2, {1, 1}), Caps{2, 2}, ComplexMode::Oracle); }),
            ErrorCode::CapExceeded);
}

TEST(Complex, ComponentRequiredWhenDividing) {
  EXPECT_EQ(code_of([] { build_boundary_complex(sig(1, {4, 4, -8})); }), ErrorCode::InconsistentComponent);
  EXPECT_EQ(code_of([] { build_boundary_complex(sig(1, {4, 4, -8}), {}, ComplexMode::Certified, 3); }),
            ErrorCode::InconsistentComponent);
}

TEST(Complex, EdgesCarryVerifiedCertificates) {
  const auto c = build_boundary_complex(sig(1, {2, -1, -1}));
  ASSERT_FALSE(c.edges.empty());
  for (const auto& [key, e] : c.edges) {
    EXPECT_LT(e.a, e.b);
    EXPECT_EQ(e.certificate.length(), 1);
    EXPECT_TRUE(verify_certificate(e.certificate).ok);
    EXPECT_TRUE(c.nodes.count(e.a) && c.nodes.count(e.b));
  }
}

TEST(Complex, Deterministic) {
  const auto a = build_boundary_complex(sig(2, {1, 1}));
  const auto b = build_boundary_complex(sig(2, {1, 1}));
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  ASSERT_EQ(a.edges.size(), b.edges.size());
  auto ia = a.edges.begin();
  for (auto ib = b.edges.begin(); ib != b.edges.end(); ++ia, ++ib) EXPECT_EQ(ia->first, ib->first);
}

struct Case {
  Signature s;
  std::optional<int> rotation;
};

void PrintTo(const Case& c, std::ostream* os) {
  *os << c.s.to_string();
  if (c.rotation) *os << " r=" << *c.rotation;
}

class ComplexProperties : public ::testing::TestWithParam<Case> {};
class CertifiedAgainstOracle : public ::testing::TestWithParam<Signature> {};

TEST_P(CertifiedAgainstOracle, CertifiedEdgesAreOracleEdges) {
  const auto& s = GetParam();
  const auto cert = build_boundary_complex(s, {}, ComplexMode::Certified);
  const auto oracle = build_boundary_complex(s, {}, ComplexMode::Oracle);
  for (const auto& [key, e] : cert.edges) EXPECT_TRUE(oracle.edges.count(key)) << e.a << " -- " << e.b;
  EXPECT_EQ(cert.nodes.size(), oracle.nodes.size());
}

TEST_P(ComplexProperties, ConnectedInDimensionTwo) {
  const auto& [s, r] = GetParam();
  ASSERT_GE(projective_dimension(s), 2);
  const auto c = build_boundary_complex(s, {}, ComplexMode::Certified, r);
  EXPECT_TRUE(c.report.connected) << s.to_string() << " components=" << c.report.components;
  EXPECT_TRUE(c.exhaustive);
}

INSTANTIATE_TEST_SUITE_P(Strata, CertifiedAgainstOracle,
                         ::testing::Values(sig(2, {2}), sig(2, {1, 1}), sig(1, {2, -1, -1}), sig(1, {3, -1, -2}),
                                           sig(0, {2, -1, -1, -1, -1}), sig(0, {1, 1, -1, -1, -1, -1}),
                                           sig(0, {3, -1, -1, -1, -1, -1}), sig(1, {3, 1, -2, -2})));

INSTANTIATE_TEST_SUITE_P(
    Strata, ComplexProperties,
    ::testing::Values(Case{sig(2, {2}), {}}, Case{sig(2, {1, 1}), {}}, Case{sig(1, {2, -1, -1}), {}},
                      Case{sig(1, {3, -1, -2}), {}}, Case{sig(0, {2, -1, -1, -1, -1}), {}},
                      Case{sig(0, {1, 1, -1, -1, -1, -1}), {}}, Case{sig(0, {3, -1, -1, -1, -1, -1}), {}},
                      Case{sig(1, {4, 4, -8}), 1}, Case{sig(1, {4, 4, -8}), 2}, Case{sig(1, {4, 4, -8}), 4},
                      Case{sig(1, {3, 1, -2, -2}), {}}));

}  // namespace
}  // namespace strata
