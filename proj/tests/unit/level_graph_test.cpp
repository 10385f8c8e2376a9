#include <gtest/gtest.h>

#include "strata/divisor.hpp"
#include "strata/level_graph.hpp"
#include "test_support.hpp"

namespace strata {
namespace {

using test::E;
using test::graph;
using test::sig;

ErrorCode violation(const LevelGraph& g, const Signature& s) {
  auto err = find_violation(g, s);
  return err ? err->code() : ErrorCode::ParseError;
}

TEST(Validate, SmoothGraph) {
  const auto s = sig(2, {1, 1});
  EXPECT_TRUE(is_valid(smooth_graph(s), s));
  EXPECT_TRUE(is_valid(graph({{2, 0}}, {{1, 0}, {1, 0}}, {}), s));
}

TEST(Validate, IrreducibleHorizontal) {
  const auto s = sig(2, {1, 1});
  const auto g = graph({{1, 0}}, {{1, 0}, {1, 0}}, {{0, -1, 0, -1}});
  EXPECT_TRUE(is_valid(g, s));
  EXPECT_EQ(classify(g).kind, DivisorKind::HorizontalIrreducible);
}

TEST(Validate, LoneSimplePole) {
  const auto s = sig(1, {1, -1});
  EXPECT_EQ(violation(graph({{1, 0}}, {{1, 0}, {-1, 0}}, {}), s), ErrorCode::LoneSimplePole);
}

TEST(Validate, DegreeViolation) {
  const auto s = sig(2, {1, 1});
  // top genus 1 with edge order 1 has degree 1, not 0
  const auto g = graph({{1, 0}, {1, -1}}, {{1, 1}, {1, 1}}, {{0, 1, 1, -3}});
  EXPECT_EQ(violation(g, s), ErrorCode::DegreeViolation);
  EXPECT_EQ(find_violation(g, s)->subject(), 0);
}

TEST(Validate, BadEdgeOrders) {
  const auto s = sig(2, {1, 1});
  // a horizontal edge across levels
  const auto g = graph({{1, 0}, {0, -1}}, {{1, 1}, {1, 1}}, {{0, -1, 1, -1}, {0, 1, 1, -3}});
  EXPECT_EQ(violation(g, s), ErrorCode::BadEdgeOrders);
  // zero end below its pole end
  const auto h = graph({{0, 0}, {2, -1}}, {{1, 0}, {1, 0}}, {{0, -4, 1, 2}});
  EXPECT_EQ(violation(h, s), ErrorCode::BadEdgeOrders);
}

TEST(Validate, Disconnected) {
  const auto s = sig(1, {0, 0});
  const auto g = graph({{1, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {});
  EXPECT_EQ(violation(g, s), ErrorCode::Disconnected);
}

TEST(ValidateProperty, BalancedDegreesForceTheGenusIdentity) {
  // summing 2 g_v - 2 over vertices gives g = sum g_v + h1 once legs match
  const auto s = sig(2, {1, 1});
  for (int g0 = 0; g0 <= 2; ++g0) {
    for (int loops = 0; loops <= 2; ++loops) {
      auto g = graph({{g0, 0}}, {{1, 0}, {1, 0}}, {});
      for (int i = 0; i < loops; ++i) g.edges.push_back({{0, -1}, {0, -1}});
      const auto err = find_violation(g, s);
      if (g0 + loops == 2) {
        EXPECT_FALSE(err) << g0 << " " << loops;
      } else {
        ASSERT_TRUE(err);
        EXPECT_EQ(err->code(), ErrorCode::DegreeViolation);
      }
    }
  }
}

TEST(Validate, Unstable) {
  // genus-0 bottom vertex holding only the zero and one edge
  const auto u = sig(0, {1, -1, -1, -1});
  const auto h = graph({{0, 0}, {0, -1}}, {{1, 1}, {-1, 0}, {-1, 0}, {-1, 0}}, {{0, 1, 1, -3}});
  EXPECT_EQ(violation(h, u), ErrorCode::Unstable);
}

TEST(Validate, LegMismatch) {
  const auto s = sig(2, {1, 1});
  EXPECT_EQ(violation(graph({{2, 0}}, {{1, 0}}, {}), s), ErrorCode::LegMismatch);
  EXPECT_EQ(violation(graph({{2, 0}}, {{2, 0}, {0, 0}}, {}), s), ErrorCode::LegMismatch);
}

TEST(Validate, LevelsNormalized) {
  const auto s = sig(2, {1, 1});
  const auto g = graph({{2, 0}, {0, -2}}, {{1, 1}, {1, 1}}, {{0, 2, 1, -4}});
  EXPECT_EQ(violation(g, s), ErrorCode::LevelsNotNormalized);
  auto h = g;
  normalize_levels(h);
  EXPECT_EQ(h.vertices[1].level, -1);
  EXPECT_TRUE(is_valid(h, s));
}

TEST(Validate, MalformedIds) {
  const auto s = sig(2, {1, 1});
  EXPECT_EQ(violation(graph({{2, 0}}, {{1, 0}, {1, 3}}, {}), s), ErrorCode::MalformedGraph);
}

TEST(Classify, Codimension) {
  const auto v = graph({{2, 0}, {0, -1}}, {{1, 1}, {1, 1}}, {{0, 2, 1, -4}});
  EXPECT_EQ(classify(v).kind, DivisorKind::Vertical);
  EXPECT_EQ(classify(v).codimension, 1);
  const auto w = graph({{1, 0}, {0, -1}}, {{1, 1}, {1, 1}}, {{0, 0, 1, -2}, {0, -1, 0, -1}});
  EXPECT_FALSE(classify(w).kind);
  EXPECT_EQ(classify(w).codimension, 2);
}

TEST(ResidueConditions, TopVerticesAreFree) {
  const auto g = graph({{1, 0}, {0, -1}}, {{1, 1}, {1, 1}}, {{0, 0, 1, -2}, {0, 0, 1, -2}});
  EXPECT_TRUE(free_of_residue_conditions(g, 0));
  EXPECT_FALSE(free_of_residue_conditions(g, 1));
  const auto h = graph({{0, 0}, {1, -1}}, {{-1, 0}, {-1, 0}, {2, 1}}, {{0, 0, 1, -2}});
  EXPECT_TRUE(free_of_residue_conditions(h, 1));
}

}  // namespace
}  // namespace strata
