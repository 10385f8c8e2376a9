#include "strata/ends.hpp"

#include <algorithm>

#include "strata/complex.hpp"
#include "strata/number_theory.hpp"

namespace strata {

namespace {

ComponentLabel resolve_component(const Signature& sig, const ComponentLabel& comp) {
  using Kind = ComponentLabel::Kind;
  if (sig.genus() == 0 || (sig.genus() == 1 && sig.holomorphic())) {
    if (comp.kind() != Kind::Single) {
      throw Error(ErrorCode::InconsistentComponent, sig.to_string() + " is connected; got component " +
                                                        comp.to_string());
    }
    return comp;
  }
  if (sig.genus() >= 2) {
    if (comp.kind() == Kind::Genus1Rotation) {
      throw Error(ErrorCode::InconsistentComponent,
                  "rotation numbers label genus-1 components only; genus >= 2 components are not classified here");
    }
    return comp;
  }
  const auto comps = genus1_components(sig);
  if (comps.empty()) {
    throw Error(ErrorCode::EmptyStratum, sig.to_string() + " admits no rotation number and is empty");
  }
  if (comp.kind() == Kind::Single) {
    if (comps.size() == 1) return comps.front();
    throw Error(ErrorCode::InconsistentComponent,
                sig.to_string() + " has " + std::to_string(comps.size()) + " components; pick a rotation number");
  }
  if (comp.kind() != Kind::Genus1Rotation || std::find(comps.begin(), comps.end(), comp) == comps.end()) {
    throw Error(ErrorCode::InconsistentComponent,
                sig.to_string() + " has no component " + comp.to_string());
  }
  return comp;
}

}  // namespace

EndsReport count_ends(const Signature& sig, const ComponentLabel& comp, bool verify, const Caps& caps) {
  EndsReport report;
  report.component = resolve_component(sig, comp);
  const int n = sig.size();

  if (projective_dimension(sig) >= 2) {
    report.count = 1;
    report.method = "Main Theorem";
    if (verify) {
      std::optional<int> rotation;
      if (report.component.kind() == ComponentLabel::Kind::Genus1Rotation && sig.order_gcd() > 1) {
        rotation = report.component.rotation_number();
      }
      const auto c = build_boundary_complex(sig, caps, ComplexMode::Certified, rotation);
      CoarseCheck check;
      check.connected = c.report.connected;
      check.nodes = static_cast<int>(c.nodes.size());
      check.edges = static_cast<int>(c.edges.size());
      check.components = c.report.components;
      check.exhaustive = c.exhaustive;
      report.verification = check;
      report.note = std::string("coarse boundary complex ") + (check.connected ? "connected" : "NOT connected");
    }
    return report;
  }

  if (sig.genus() == 0 && n <= 3) {
    report.count = 0;
    report.method = "compact stratum";
    return report;
  }
  if (sig.genus() == 0 && n == 4) {
    report.count = 3;
    report.method = "three boundary points";
    return report;
  }
  if (sig.genus() == 1 && n <= 2) {
    std::int64_t m = 1;
    std::int64_t r = 1;
    if (n == 2) {
      m = std::max(sig.order(1), sig.order(2));
      r = report.component.rotation_number();
    }
    const std::int64_t level = m / r;
    report.count = cusp_count_oracle(CuspQuery{level});
    report.method = "cusp oracle";
    const auto formula = cusp_count_formula(m, r);
    report.note = "oracle (N=" + std::to_string(level) + "); cusp formula: " + formula.to_string();
    if (level >= 5) {
      report.note += formula == Rational(report.count) ? " (cross-check ok)" : " (cross-check FAILED)";
    }
    return report;
  }
  throw Error(ErrorCode::PreconditionFail, "no ends rule for " + sig.to_string());
}

}  // namespace strata
