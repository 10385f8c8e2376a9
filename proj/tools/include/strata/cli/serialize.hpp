#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "strata/certificate.hpp"
#include "strata/complex.hpp"
#include "strata/divisor.hpp"
#include "strata/ends.hpp"
#include "strata/level_graph.hpp"
#include "strata/signature.hpp"

namespace strata::cli {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// A level graph together with its stratum and optional divisor data.
struct GraphDocument {
  Signature signature;
  LevelGraph graph;
  std::optional<DivisorKind> kind;
  Decoration decoration;
};

json signature_to_json(const Signature& sig);
json document_to_json(const Signature& sig, const LevelGraph& graph);
json divisor_to_json(const Signature& sig, const BoundaryDivisor& divisor);

// Strict: unknown fields, wrong types, non-integers and unknown versions are
// rejected with ParseError; the graph is then validated against its signature.
GraphDocument parse_document(const json& doc);
GraphDocument parse_document_text(std::string_view text);

json certificate_to_json(const Certificate& cert, const VerificationReport& report);
json complex_to_json(const BoundaryComplex& complex);
json divisors_to_json(const Signature& sig, const std::vector<BoundaryDivisor>& divisors, bool exhaustive);
json ends_to_json(const Signature& sig, const EndsReport& report);

// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& value);

}  // namespace strata::cli
