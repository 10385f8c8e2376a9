#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/certificate.hpp"
#include "strata/divisor.hpp"
#include "strata/enumerate.hpp"
#include "strata/signature.hpp"

namespace strata {

enum class ComplexMode { Certified, Oracle };

const char* to_string(ComplexMode mode) noexcept;

struct ConnectivityReport {
  bool connected = false;
  bool no_boundary = false;  // no nodes at all
  int components = 0;
  std::vector<std::string> representatives;  // smallest node key of each component
};

// An edge joins two distinct nodes; its certificate is a single step.
struct ComplexEdge {
  std::string a;  // a < b
  std::string b;
  Certificate certificate;
};

// Boundary divisors as nodes, nonempty pairwise intersections as edges.
// Divisors are identified with their decorated graphs, so every result is
// coarse: no prong-matching data is kept.
struct BoundaryComplex {
  Signature signature;
  ComplexMode mode = ComplexMode::Certified;
  std::optional<int> rotation;  // genus 1 with d > 1: the component
  std::map<std::string, BoundaryDivisor> nodes;
  std::map<std::pair<std::string, std::string>, ComplexEdge> edges;
  bool exhaustive = true;
  bool coarse = true;
  ConnectivityReport report;
};

// Certified mode links divisors only through explicit rewrite moves, each
// edge carrying a verified certificate. Oracle mode enumerates every
// codimension-2 graph and links its two undegenerations; it refuses
// (CapExceeded) when the caps are not exhaustive.
//
// Genus-1 strata whose orders have gcd d > 1 need the component, given as its
// rotation number.
BoundaryComplex build_boundary_complex(const Signature& sig, const Caps& caps = {},
                                       ComplexMode mode = ComplexMode::Certified,
                                       std::optional<int> rotation = std::nullopt);

// Union-find over the edges.
ConnectivityReport is_connected(const BoundaryComplex& complex);

}  // namespace strata
