#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/divisor.hpp"
#include "strata/level_graph.hpp"
#include "strata/signature.hpp"

namespace strata {

// One hop of a path in the boundary complex: `witness` is a codimension-2
// graph that undegenerates both to `divisor` and to the next divisor.
struct CertificateStep {
  BoundaryDivisor divisor;
  LevelGraph witness;
  std::string move;
  std::string audit;
};

// A path of divisors from `start` to `end`. The divisor after steps[i] is
// steps[i + 1].divisor, or `end` for the last step. No steps means start and
// end coincide.
struct Certificate {
  Signature signature;
  BoundaryDivisor start;
  BoundaryDivisor end;
  std::vector<CertificateStep> steps;

  int length() const noexcept { return static_cast<int>(steps.size()); }
  // Divisor i of the path, 0 <= i <= length().
  const BoundaryDivisor& divisor(int i) const;
};

struct VerificationReport {
  bool ok = true;
  std::optional<int> failing_step;
  std::string reason;
};

// Rechecks every divisor, witness and decoration from scratch. Shares only the
// graph validator and canonical encoding with the code that builds certificates.
VerificationReport verify_certificate(const Certificate& cert);

}  // namespace strata
