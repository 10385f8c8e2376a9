#include "strata/cli/dot.hpp"

#include <map>
#include <sstream>

namespace strata::cli {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string divisor_label(const BoundaryDivisor& d) {
  std::string label = to_string(d.kind);
  if (d.decoration.index) label += " I=" + std::to_string(d.decoration.index->canonical());
  if (d.decoration.vertex_rotation) label += " R=" + std::to_string(*d.decoration.vertex_rotation);
  return label;
}

void write_divisor(std::ostream& os, const BoundaryDivisor& d, int i) {
  const auto& g = d.graph;
  const std::string p = "d" + std::to_string(i) + "_";
  os << "  subgraph cluster_" << i << " {\n";
  os << "    label=" << quote("D" + std::to_string(i) + ": " + divisor_label(d)) << ";\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "    " << p << "v" << v << " [shape=circle, label="
       << quote("g=" + std::to_string(g.vertices[v].genus) + ", level " + std::to_string(g.vertices[v].level))
       << "];\n";
  }
  for (const auto& leg : g.legs) {
    os << "    " << p << "z" << leg.point << " [shape=plaintext, label="
       << quote("z" + std::to_string(leg.point) + " (" + std::to_string(leg.order) + ")") << "];\n";
    os << "    " << p << "v" << leg.vertex << " -> " << p << "z" << leg.point << " [arrowhead=none];\n";
  }
  for (int l = 0; l >= g.bottom_level(); --l) {
    os << "    { rank=same;";
    for (int v : g.vertices_at_level(l)) os << " " << p << "v" << v << ";";
    os << " }\n";
  }
  for (const auto& e : g.edges) {
    if (e.horizontal()) {
      os << "    " << p << "v" << e.a.vertex << " -> " << p << "v" << e.b.vertex
         << " [style=dashed, dir=none, label=\"-1,-1\"];\n";
    } else {
      os << "    " << p << "v" << e.upper().vertex << " -> " << p << "v" << e.lower().vertex
         << " [label=" << quote(std::to_string(e.upper().order) + "," + std::to_string(e.lower().order)) << "];\n";
    }
  }
  os << "  }\n";
}

}  // namespace

std::string divisors_to_dot(const Signature& sig, const std::vector<BoundaryDivisor>& divisors) {
  std::ostringstream os;
  os << "digraph divisors {\n";
  os << "  label=" << quote(sig.to_string() + " (coarse)") << ";\n";
  os << "  rankdir=TB;\n";
  for (std::size_t i = 0; i < divisors.size(); ++i) write_divisor(os, divisors[i], static_cast<int>(i));
  os << "}\n";
  return os.str();
}

std::string complex_to_dot(const BoundaryComplex& c) {
  std::ostringstream os;
  os << "graph complex {\n";
  os << "  label=" << quote(c.signature.to_string() + " " + to_string(c.mode) + " (coarse), " +
                            std::to_string(c.report.components) + " component(s)")
     << ";\n";
  std::map<std::string, int> id;
  for (const auto& [key, d] : c.nodes) {
    const int i = static_cast<int>(id.size());
    id.emplace(key, i);
    os << "  n" << i << " [shape=box, label=" << quote("D" + std::to_string(i) + ": " + divisor_label(d))
       << ", tooltip=" << quote(key) << "];\n";
  }
  for (const auto& [pair, e] : c.edges) {
    os << "  n" << id.at(e.a) << " -- n" << id.at(e.b) << " [label=" << quote(e.certificate.steps.front().move)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace strata::cli
