#pragma once

#include "strata/certificate.hpp"
#include "strata/components.hpp"
#include "strata/divisor.hpp"
#include "strata/signature.hpp"

namespace strata {

// One step from a separating horizontal divisor to the irreducible one, by a
// loop on the side of larger genus (ties: the side holding the smallest leg
// label).
Certificate connect_horizontal_separating(const BoundaryDivisor& divisor, const Signature& sig);

// At most four steps from a vertical divisor to the irreducible horizontal
// divisor. Needs g >= 1 and projective dimension >= 2.
Certificate path_vertical_to_dhirr(const BoundaryDivisor& divisor, const Signature& sig);

// Genus 1, n >= 3: walks from the irreducible horizontal divisor of index
// `from` to that of index `to` through the gcd chains of both indices. Both
// indices must have the same rotation number.
Certificate genus1_index_walk(const Signature& sig, const IndexClass& from, const IndexClass& to);

// The irreducible horizontal divisor carrying index I.
BoundaryDivisor indexed_dhirr(const Signature& sig, const IndexClass& index);

// The two-level divisor of a gcd-chain step through point i: the genus-1
// vertex holds leg i and lies in the component of rotation `rotation`.
BoundaryDivisor index_step_divisor(const Signature& sig, int point, int rotation);

}  // namespace strata
