#include "strata/cli/serialize.hpp"

#include <initializer_list>
#include <set>

namespace strata::cli {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

const json& object(const json& value, const char* what, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!value.is_object()) parse_error(std::string(what) + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!value.contains(k)) parse_error(std::string(what) + " lacks field \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, v] : value.items()) {
    if (!allowed.count(key)) parse_error(std::string(what) + " has unknown field \"" + key + "\"");
  }
  return value;
}

int integer(const json& value, const char* what) {
  if (!value.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  const auto v = value.get<long long>();
  if (v < -1000000 || v > 1000000) parse_error(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

const json& array(const json& value, const char* what) {
  if (!value.is_array()) parse_error(std::string(what) + " must be an array");
  return value;
}

Signature parse_signature(const json& value) {
  object(value, "signature", {"genus", "orders"});
  std::vector<int> orders;
  for (const auto& o : array(value["orders"], "signature.orders")) orders.push_back(integer(o, "order"));
  return Signature::make(integer(value["genus"], "signature.genus"), std::move(orders));
}

DivisorKind parse_kind(const json& value) {
  if (!value.is_string()) parse_error("decorations.kind must be a string");
  const auto s = value.get<std::string>();
  for (auto k : {DivisorKind::Vertical, DivisorKind::HorizontalIrreducible, DivisorKind::HorizontalSeparating}) {
    if (s == to_string(k)) return k;
  }
  parse_error("unknown divisor kind \"" + s + "\"");
}

json graph_fields(const Signature& sig, const LevelGraph& g) {
  json doc = json::object();
  doc["format_version"] = kFormatVersion;
  doc["signature"] = signature_to_json(sig);
  doc["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    doc["vertices"].push_back({{"id", v}, {"genus", g.vertices[v].genus}, {"level", g.vertices[v].level}});
  }
  doc["legs"] = json::array();
  for (const auto& leg : g.legs) {
    doc["legs"].push_back({{"point", leg.point}, {"order", leg.order}, {"vertex", leg.vertex}});
  }
  doc["edges"] = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges[e];
    doc["edges"].push_back({{"id", e},
                            {"v_a", edge.a.vertex},
                            {"order_a", edge.a.order},
                            {"v_b", edge.b.vertex},
                            {"order_b", edge.b.order}});
  }
  return doc;
}

}  // namespace

json signature_to_json(const Signature& sig) {
  json orders = json::array();
  for (int m : sig.orders()) orders.push_back(m);
  return {{"genus", sig.genus()}, {"orders", orders}};
}

json document_to_json(const Signature& sig, const LevelGraph& graph) { return graph_fields(sig, graph); }

json divisor_to_json(const Signature& sig, const BoundaryDivisor& divisor) {
  json doc = graph_fields(sig, divisor.graph);
  json deco = {{"kind", to_string(divisor.kind)}};
  if (divisor.decoration.index) {
    deco["index"] = {{"index", divisor.decoration.index->index()},
                     {"modulus", divisor.decoration.index->modulus()},
                     {"class", divisor.decoration.index->canonical()}};
  }
  if (divisor.decoration.vertex_rotation) deco["vertex_rotation"] = *divisor.decoration.vertex_rotation;
  if (divisor.decoration.irreducible_by_classification) deco["irreducible_by_classification"] = true;
  doc["decorations"] = deco;
  return doc;
}

GraphDocument parse_document(const json& doc) {
  object(doc, "document", {"format_version", "signature", "vertices", "legs", "edges"}, {"decorations"});
  if (integer(doc["format_version"], "format_version") != kFormatVersion) {
    parse_error("unsupported format_version " + doc["format_version"].dump());
  }
  GraphDocument out{parse_signature(doc["signature"]), {}, std::nullopt, {}};

  std::map<int, int> vertex_pos;
  for (const auto& v : array(doc["vertices"], "vertices")) {
    object(v, "vertex", {"id", "genus", "level"});
    const int id = integer(v["id"], "vertex.id");
    if (!vertex_pos.emplace(id, out.graph.vertex_count()).second) {
      parse_error("duplicate vertex id " + std::to_string(id));
    }
    out.graph.vertices.push_back({integer(v["genus"], "vertex.genus"), integer(v["level"], "vertex.level")});
  }
  auto vertex = [&](const json& value, const char* what) {
    const int id = integer(value, what);
    const auto it = vertex_pos.find(id);
    if (it == vertex_pos.end()) parse_error(std::string(what) + " names missing vertex " + std::to_string(id));
    return it->second;
  };
  for (const auto& leg : array(doc["legs"], "legs")) {
    object(leg, "leg", {"point", "order", "vertex"});
    out.graph.legs.push_back({integer(leg["point"], "leg.point"), integer(leg["order"], "leg.order"),
                              vertex(leg["vertex"], "leg.vertex")});
  }
  std::set<int> edge_ids;
  for (const auto& e : array(doc["edges"], "edges")) {
    object(e, "edge", {"id", "v_a", "order_a", "v_b", "order_b"});
    if (!edge_ids.insert(integer(e["id"], "edge.id")).second) parse_error("duplicate edge id");
    out.graph.edges.push_back({{vertex(e["v_a"], "edge.v_a"), integer(e["order_a"], "edge.order_a")},
                               {vertex(e["v_b"], "edge.v_b"), integer(e["order_b"], "edge.order_b")}});
  }
  validate(out.graph, out.signature);

  if (doc.contains("decorations")) {
    const auto& deco = object(doc["decorations"], "decorations", {"kind"},
                              {"index", "vertex_rotation", "irreducible_by_classification"});
    out.kind = parse_kind(deco["kind"]);
    const auto c = classify(out.graph);
    if (!c.kind || *c.kind != *out.kind) parse_error("decorations.kind does not match the graph");
    if (deco.contains("index")) {
      const auto& idx = object(deco["index"], "decorations.index", {"index", "modulus"}, {"class"});
      out.decoration.index = IndexClass(integer(idx["index"], "index.index"), integer(idx["modulus"], "index.modulus"));
      if (idx.contains("class") && integer(idx["class"], "index.class") != out.decoration.index->canonical()) {
        parse_error("index.class is not the canonical representative");
      }
    }
    if (deco.contains("vertex_rotation")) {
      out.decoration.vertex_rotation = integer(deco["vertex_rotation"], "vertex_rotation");
    }
    if (deco.contains("irreducible_by_classification")) {
      if (!deco["irreducible_by_classification"].is_boolean()) parse_error("irreducible_by_classification must be a boolean");
      out.decoration.irreducible_by_classification = deco["irreducible_by_classification"].get<bool>();
    }
  }
  return out;
}

GraphDocument parse_document_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

json certificate_to_json(const Certificate& cert, const VerificationReport& report) {
  const auto& sig = cert.signature;
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"divisor", divisor_to_json(sig, s.divisor)},
                     {"witness", document_to_json(sig, s.witness)},
                     {"move", s.move},
                     {"audit", s.audit}});
  }
  json verification = {{"ok", report.ok}};
  if (report.failing_step) verification["failing_step"] = *report.failing_step;
  if (!report.reason.empty()) verification["reason"] = report.reason;
  return {{"format_version", kFormatVersion},
          {"coarse", true},
          {"signature", signature_to_json(sig)},
          {"start", divisor_to_json(sig, cert.start)},
          {"end", divisor_to_json(sig, cert.end)},
          {"length", cert.length()},
          {"steps", steps},
          {"verification", verification}};
}

json complex_to_json(const BoundaryComplex& c) {
  json nodes = json::array();
  for (const auto& [key, d] : c.nodes) nodes.push_back({{"key", key}, {"divisor", divisor_to_json(c.signature, d)}});
  json edges = json::array();
  for (const auto& [pair, e] : c.edges) {
    const auto& step = e.certificate.steps.front();
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"move", step.move},
                     {"audit", step.audit},
                     {"witness", document_to_json(c.signature, step.witness)}});
  }
  json report = {{"connected", c.report.connected},
                 {"components", c.report.components},
                 {"representatives", c.report.representatives},
                 {"no_boundary", c.report.no_boundary}};
  json out = {{"format_version", kFormatVersion},
              {"coarse", c.coarse},
              {"exhaustive", c.exhaustive},
              {"mode", to_string(c.mode)},
              {"signature", signature_to_json(c.signature)},
              {"nodes", nodes},
              {"edges", edges},
              {"report", report}};
  if (c.rotation) out["rotation"] = *c.rotation;
  return out;
}

json divisors_to_json(const Signature& sig, const std::vector<BoundaryDivisor>& divisors, bool exhaustive) {
  json list = json::array();
  for (const auto& d : divisors) list.push_back(divisor_to_json(sig, d));
  return {{"format_version", kFormatVersion},
          {"coarse", true},
          {"exhaustive", exhaustive},
          {"signature", signature_to_json(sig)},
          {"divisors", list}};
}

json ends_to_json(const Signature& sig, const EndsReport& report) {
  json out = {{"format_version", kFormatVersion},
              {"signature", signature_to_json(sig)},
              {"count", report.count},
              {"method", report.method},
              {"component", report.component.to_string()}};
  if (!report.note.empty()) out["note"] = report.note;
  if (report.verification) {
    const auto& v = *report.verification;
    out["verification"] = {{"coarse", true},
                           {"connected", v.connected},
                           {"nodes", v.nodes},
                           {"edges", v.edges},
                           {"components", v.components},
                           {"exhaustive", v.exhaustive}};
  }
  return out;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace strata::cli
