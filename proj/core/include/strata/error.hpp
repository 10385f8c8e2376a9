#pragma once

#include <stdexcept>
#include <string>

namespace strata {

enum class ErrorCode {
  // signatures and number theory
  DegreeMismatch,
  EmptyOrderList,
  NegativeGenus,
  NonPositive,
  NotDivisor,
  WrongGenus,
  NoPole,
  InconsistentComponent,
  EmptyStratum,
  // level graphs
  MalformedGraph,
  LegMismatch,
  BadEdgeOrders,
  LevelsNotNormalized,
  Disconnected,
  DegreeViolation,
  GenusMismatch,
  Unstable,
  LoneSimplePole,
  NotADivisor,
  CapExceeded,
  // moves
  TooFewZeroes,
  ValidationFailure,
  GenusZero,
  GenusTooSmall,
  ResidueConditionsPossible,
  LoneVertexAtLevel,
  NoSuchTransition,
  PreconditionFail,
  // connectivity
  RotationMismatch,
  DegenerateSignature,
  InternalInconsistency,
  // serialization
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type. `subject` is the
// vertex or edge id the error refers to, or -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int subject = -1);

  ErrorCode code() const noexcept { return code_; }
  int subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  int subject_;
};

}  // namespace strata
