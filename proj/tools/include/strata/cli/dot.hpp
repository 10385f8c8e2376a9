#pragma once

#include <string>
#include <vector>

#include "strata/complex.hpp"
#include "strata/divisor.hpp"
#include "strata/signature.hpp"

namespace strata::cli {

// One cluster per divisor. Vertical edges point from the upper to the lower
// vertex; horizontal edges are dashed and undirected.
std::string divisors_to_dot(const Signature& sig, const std::vector<BoundaryDivisor>& divisors);

// Undirected graph with one node per divisor and one edge per certified pair.
std::string complex_to_dot(const BoundaryComplex& complex);

}  // namespace strata::cli
