#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/divisor.hpp"
#include "strata/level_graph.hpp"
#include "strata/signature.hpp"

namespace strata {

// Outcome of a degeneration move. When `witness` is present it is a
// codimension-2 graph whose two undegenerations are `linked[0]` (the input)
// and `linked[1]`.
struct MoveResult {
  LevelGraph result;
  std::optional<LevelGraph> witness;
  std::vector<LevelGraph> linked;
  std::string move;
  std::string parameters;
};

// Vertical divisor colliding every zero: a genus-g top vertex keeps the poles
// and marked points, a genus-0 bottom vertex takes every zero.
MoveResult merge_zeroes(const Signature& sig);

// Single vertex of genus g - 1 carrying every leg and a simple-pole loop.
BoundaryDivisor construct_dhirr(const Signature& sig);

// Replaces vertex v by a vertex of genus g_v - 1 with a horizontal loop.
// Refused unless v is free of global residue conditions.
MoveResult insert_horizontal_loop(const LevelGraph& graph, int v, const Signature& sig);

enum class Direction { Up, Down };

// Moves v of a vertical divisor to a new level of its own, above the top
// level (Up) or below the bottom level (Down). Nothing else changes.
LevelGraph pull_vertex(const LevelGraph& graph, int v, Direction direction, const Signature& sig);

// Merges levels `upper_level` and `upper_level - 1` by contracting the edges
// running between them; each merged cluster becomes one vertex of genus
// (sum of genera) + h1(cluster).
LevelGraph collapse_level_transition(const LevelGraph& graph, int upper_level,
                                     const Signature& sig);

// Contracts one horizontal edge (a loop raises the genus by one).
LevelGraph smooth_horizontal_edge(const LevelGraph& graph, int edge, const Signature& sig);

// All single undegenerations: one per level transition, then one per
// horizontal edge.
std::vector<LevelGraph> undegenerations(const LevelGraph& graph, const Signature& sig);

// A half-edge at a vertex: a leg, or one end of an edge.
struct HalfEdge {
  enum class Kind { Leg, EdgeA, EdgeB };
  Kind kind = Kind::Leg;
  int index = 0;  // position in graph.legs or graph.edges

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

std::vector<HalfEdge> half_edges_at(const LevelGraph& graph, int v);

// Collides the half-edges `subset` of the genus-0 vertex v into a new genus-0
// vertex joined to the rest of v by a new edge whose orders are forced by the
// degree equation. Returns one result per admissible level placement of the
// new vertex that gives a valid graph of codimension one more than `graph`;
// the result of each is the other undegeneration of the witness.
std::vector<MoveResult> split_vertex(const LevelGraph& graph, int v,
                                     const std::vector<HalfEdge>& subset, const Signature& sig);

// Two-vertex vertical divisor, both vertices of genus 0: collides the ends at
// v of the two edges `targets` into a vertex on an intermediate level, then
// collapses that vertex into its two-edge partner, creating genus 1.
MoveResult collide_points(const LevelGraph& graph, int v, std::pair<int, int> targets,
                          const Signature& sig);

// Same, choosing the vertex and edge pair whose result has the smallest
// canonical form.
MoveResult collide_points(const LevelGraph& graph, const Signature& sig);

}  // namespace strata
