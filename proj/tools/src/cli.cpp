#include "strata/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "strata/cli/dot.hpp"
#include "strata/cli/selfcheck.hpp"
#include "strata/cli/serialize.hpp"
#include "strata/complex.hpp"
#include "strata/connectivity.hpp"
#include "strata/ends.hpp"

namespace strata::cli {

namespace {

int to_int(std::string_view s, const std::string& what) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError, what + ": \"" + std::string(s) + "\" is not an integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Options shared by every stratum subcommand.
struct StratumArgs {
  int genus = 0;
  std::string orders;
  std::string caps;
  std::string component;
};

void add_stratum(CLI::App* cmd, StratumArgs& a) {
  cmd->add_option("-g,--genus", a.genus, "genus of the stratum")->required();
  cmd->add_option("-m,--orders", a.orders, "orders m1,...,mn")->required()->allow_extra_args(false);
}

Signature signature_of(const StratumArgs& a) { return Signature::make(a.genus, parse_orders(a.orders)); }

Caps caps_of(const StratumArgs& a) {
  if (!a.caps.empty()) return parse_caps(a.caps);
  if (const char* env = std::getenv("STRATA_CAPS"); env && *env) return parse_caps(env);
  return Caps{};
}

ComponentLabel component_of(const Signature& sig, const std::string& text) {
  if (sig.genus() >= 2 && !text.empty()) {
    throw Error(ErrorCode::InconsistentComponent,
                "component classification in genus >= 2 is out of scope; drop --component");
  }
  if (text.empty() || text == "single") {
    if (sig.genus() >= 2) return ComponentLabel::opaque("unclassified");
    return ComponentLabel::single();
  }
  if (text.rfind("r=", 0) != 0) {
    throw Error(ErrorCode::ParseError, "--component expects r=R, got \"" + text + "\"");
  }
  return ComponentLabel::rotation(to_int(std::string_view(text).substr(2), "--component"));
}

std::optional<int> rotation_of(const Signature& sig, const std::string& text) {
  const auto label = component_of(sig, text);
  if (label.kind() == ComponentLabel::Kind::Genus1Rotation) return label.rotation_number();
  if (sig.genus() == 1 && !sig.holomorphic() && sig.order_gcd() > 1) {
    throw Error(ErrorCode::InconsistentComponent,
                sig.to_string() + " has several components; pass --component r=R");
  }
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw Error(ErrorCode::ParseError, "unknown --format " + format);
}

int emit_certificate(const Certificate& cert, std::ostream& out, std::ostream& err) {
  const auto report = verify_certificate(cert);
  out << dump(certificate_to_json(cert, report));
  if (!report.ok) {
    err << "error: certificate failed verification";
    if (report.failing_step) err << " at step " << *report.failing_step;
    err << ": " << report.reason << "\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace

Caps parse_caps(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "caps must be V,E, got \"" + text + "\"");
  Caps caps{to_int(parts[0], "caps"), to_int(parts[1], "caps")};
  if (caps.max_vertices < 1 || caps.max_edges < 1) {
    throw Error(ErrorCode::NonPositive, "caps must be positive, got \"" + text + "\"");
  }
  return caps;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  for (auto part : split(text, ',')) orders.push_back(to_int(part, "orders"));
  return orders;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary divisors, connectivity certificates and ends of strata of 1-forms", "strata"};
  app.require_subcommand(1);

  StratumArgs a;
  bool verify = false;
  std::string format;
  std::string mode = "certified";
  std::string from_file;
  int from_index = 0;
  int to_index = 0;
  bool deep = false;

  auto* ends = app.add_subcommand("ends", "number of ends of a stratum component");
  add_stratum(ends, a);
  ends->add_option("--component", a.component, "r=R for genus-1 components");
  ends->add_flag("--verify", verify, "also check the certified boundary complex");
  ends->add_option("--caps", a.caps, "enumeration caps V,E");
  ends->add_option("--format", format, "text|json")->default_str("text");

  auto* components = app.add_subcommand("components", "connected components");
  add_stratum(components, a);

  auto* divisors = app.add_subcommand("divisors", "boundary divisors");
  add_stratum(divisors, a);
  divisors->add_option("--format", format, "json|dot");
  divisors->add_option("--caps", a.caps, "enumeration caps V,E");

  auto* complex = app.add_subcommand("complex", "boundary complex and its connectivity");
  add_stratum(complex, a);
  complex->add_option("--mode", mode, "certified|oracle");
  complex->add_option("--format", format, "json|dot");
  complex->add_option("--component", a.component, "r=R for genus-1 components");
  complex->add_option("--caps", a.caps, "enumeration caps V,E");

  auto* path = app.add_subcommand("path", "certificate from a divisor to the irreducible horizontal divisor");
  add_stratum(path, a);
  path->add_option("--from", from_file, "graph document (JSON)")->required();

  auto* walk = app.add_subcommand("walk-index", "genus-1 index walk certificate");
  add_stratum(walk, a);
  walk->add_option("--from", from_index, "start index I")->required();
  walk->add_option("--to", to_index, "end index J")->required();

  auto* check = app.add_subcommand("check", "run the acceptance suite");
  check->add_flag("--deep", deep, "sample more signatures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (check->parsed()) {
      bool all = true;
      for (const auto& r : run_selfcheck(deep)) {
        out << format_result(r) << "\n";
        all &= r.passed;
      }
      return all ? kOk : kInternalError;
    }

    const auto sig = signature_of(a);

    if (ends->parsed()) {
      require_format(format.empty() ? "text" : format, {"text", "json"});
      const auto report = count_ends(sig, component_of(sig, a.component), verify, caps_of(a));
      if (format == "json") {
        out << dump(ends_to_json(sig, report));
      } else {
        out << report.count << "\n";
        out << "method: " << report.method << "\n";
        out << "component: " << report.component.to_string() << "\n";
        if (!report.note.empty()) out << "note: " << report.note << "\n";
        if (report.verification) {
          const auto& v = *report.verification;
          out << "coarse check: " << (v.connected ? "connected" : "not connected") << " (" << v.nodes
              << " nodes, " << v.edges << " edges, " << v.components << " components"
              << (v.exhaustive ? "" : ", caps not exhaustive") << ")\n";
        }
      }
      if (report.verification && !report.verification->connected) return kInternalError;
      return kOk;
    }

    if (components->parsed()) {
      if (sig.genus() >= 2) {
        out << ComponentLabel::opaque("unclassified").to_string() << "\n";
      } else if (sig.genus() == 0 || sig.holomorphic()) {
        out << ComponentLabel::single().to_string() << "\n";
      } else {
        const auto comps = genus1_components(sig);
        if (comps.empty()) out << "(empty stratum)\n";
        for (const auto& c : comps) out << c.to_string() << "\n";
      }
      return kOk;
    }

    if (divisors->parsed()) {
      require_format(format.empty() ? "json" : format, {"json", "dot"});
      auto vertical = enumerate_vertical_divisors(sig, caps_of(a));
      auto list = std::move(vertical.divisors);
      for (auto& d : enumerate_horizontal_divisors(sig)) list.push_back(std::move(d));
      if (format == "dot") {
        out << divisors_to_dot(sig, list);
      } else {
        out << dump(divisors_to_json(sig, list, vertical.exhaustive));
      }
      if (!vertical.exhaustive) err << "warning: caps are not exhaustive for " << sig.to_string() << "\n";
      return kOk;
    }

    if (complex->parsed()) {
      require_format(format.empty() ? "json" : format, {"json", "dot"});
      if (mode != "certified" && mode != "oracle") throw Error(ErrorCode::ParseError, "unknown --mode " + mode);
      const auto c = build_boundary_complex(sig, caps_of(a),
                                            mode == "oracle" ? ComplexMode::Oracle : ComplexMode::Certified,
                                            rotation_of(sig, a.component));
      if (format == "dot") {
        out << complex_to_dot(c);
      } else {
        out << dump(complex_to_json(c));
      }
      return kOk;
    }

    if (path->parsed()) {
      const auto doc = parse_document_text(read_file(from_file));
      if (!(doc.signature == sig)) {
        throw Error(ErrorCode::PreconditionFail,
                    "document is in " + doc.signature.to_string() + ", not " + sig.to_string());
      }
      const auto d = make_divisor(doc.graph, sig, doc.decoration);
      switch (d.kind) {
        case DivisorKind::Vertical: return emit_certificate(path_vertical_to_dhirr(d, sig), out, err);
        case DivisorKind::HorizontalSeparating:
          return emit_certificate(connect_horizontal_separating(d, sig), out, err);
        case DivisorKind::HorizontalIrreducible:
          return emit_certificate(Certificate{sig, d, d, {}}, out, err);
      }
    }

    if (walk->parsed()) {
      const int d = sig.order_gcd();
      return emit_certificate(genus1_index_walk(sig, IndexClass(from_index, d), IndexClass(to_index, d)), out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? kInternalError : kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInvalidInput;
}

}  // namespace strata::cli
