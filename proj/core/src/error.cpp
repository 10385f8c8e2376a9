#include "strata/error.hpp"

namespace strata {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EmptyOrderList: return "EmptyOrderList";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::WrongGenus: return "WrongGenus";
    case ErrorCode::NoPole: return "NoPole";
    case ErrorCode::InconsistentComponent: return "InconsistentComponent";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::LegMismatch: return "LegMismatch";
    case ErrorCode::BadEdgeOrders: return "BadEdgeOrders";
    case ErrorCode::LevelsNotNormalized: return "LevelsNotNormalized";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::LoneSimplePole: return "LoneSimplePole";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TooFewZeroes: return "TooFewZeroes";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::ResidueConditionsPossible: return "ResidueConditionsPossible";
    case ErrorCode::LoneVertexAtLevel: return "LoneVertexAtLevel";
    case ErrorCode::NoSuchTransition: return "NoSuchTransition";
    case ErrorCode::PreconditionFail: return "PreconditionFail";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::DegenerateSignature: return "DegenerateSignature";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int subject)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      subject_(subject) {}

}  // namespace strata
