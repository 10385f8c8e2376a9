#include "strata/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "strata/canonical.hpp"
#include "strata/connectivity.hpp"
#include "strata/moves.hpp"
#include "strata/union_find.hpp"

namespace strata {

const char* to_string(ComplexMode mode) noexcept {
  return mode == ComplexMode::Certified ? "certified" : "oracle";
}

namespace {

class Builder {
 public:
  Builder(const Signature& sig, const Caps& caps, ComplexMode mode, std::optional<int> rotation)
      : c_{sig, mode, rotation, {}, {}, caps_are_exhaustive(sig, caps), true, {}}, caps_(caps) {
    indexed_ = sig.genus() == 1 && !sig.holomorphic() && sig.order_gcd() > 1;
    if (indexed_) {
      if (!rotation) {
        throw Error(ErrorCode::InconsistentComponent,
                    sig.to_string() + " has several components; a rotation number is required");
      }
      if (sig.order_gcd() % *rotation != 0 || *rotation < 1) {
        throw Error(ErrorCode::InconsistentComponent,
                    "rotation " + std::to_string(*rotation) + " does not divide " +
                        std::to_string(sig.order_gcd()));
      }
    } else if (rotation && *rotation != 1) {
      throw Error(ErrorCode::InconsistentComponent,
                  sig.to_string() + " has no component of rotation " + std::to_string(*rotation));
    }
  }

  BoundaryComplex build() {
    const auto& sig = c_.signature;
    auto vertical = enumerate_vertical_divisors(sig, caps_);
    for (const auto& d : vertical.divisors) node(d);
    for (const auto& d : enumerate_horizontal_divisors(sig)) {
      if (d.kind == DivisorKind::HorizontalIrreducible && indexed_) {
        for (const auto& cls : index_classes(sig.order_gcd())) {
          if (rotation_of_index(cls) == *c_.rotation) node(indexed_dhirr(sig, cls));
        }
      } else {
        node(d);
      }
    }
    if (c_.mode == ComplexMode::Certified) {
      certified_edges();
    } else {
      oracle_edges();
    }
    c_.report = is_connected(c_);
    return std::move(c_);
  }

 private:
  std::string node(const BoundaryDivisor& d) {
    const auto& sig = c_.signature;
    BoundaryDivisor plain = d;
    if (d.kind == DivisorKind::HorizontalIrreducible && indexed_) {
      const int canon = d.decoration.index ? d.decoration.index->canonical() : *c_.rotation;
      plain = indexed_dhirr(sig, IndexClass(canon, sig.order_gcd()));
    } else if (d.decoration.vertex_rotation) {
      plain.decoration = {};
    }
    auto key = plain.key();
    c_.nodes.try_emplace(key, std::move(plain));
    return key;
  }

  void add_step(const Certificate& single) {
    if (single.start.key() == single.end.key()) return;
    const auto report = verify_certificate(single);
    if (!report.ok) {
      throw Error(ErrorCode::InternalInconsistency, "edge certificate from " + single.start.key() +
                                                        " failed verification: " + report.reason);
    }
    auto a = node(single.start);
    auto b = node(single.end);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    c_.edges.try_emplace({a, b}, ComplexEdge{a, b, single});
  }

  void add_path(const Certificate& cert) {
    for (int i = 0; i < cert.length(); ++i) {
      add_step(Certificate{cert.signature, cert.divisor(i), cert.divisor(i + 1),
                           {cert.steps[static_cast<std::size_t>(i)]}});
    }
  }

  void add_witness(const BoundaryDivisor& from, const LevelGraph& witness, const LevelGraph& to,
                   const std::string& move, const std::string& audit) {
    const auto& sig = c_.signature;
    add_step(Certificate{sig, from, make_divisor(to, sig), {{from, witness, move, audit}}});
  }

  bool within_caps(const LevelGraph& g) const {
    return g.vertex_count() <= caps_.max_vertices && g.edge_count() <= caps_.max_edges;
  }

  void certified_edges() {
    const auto& sig = c_.signature;
    if (projective_dimension(sig) < 2) return;
    std::vector<BoundaryDivisor> base;
    for (const auto& [key, d] : c_.nodes) base.push_back(d);

    if (sig.genus() >= 1) {
      for (const auto& d : base) {
        if (d.kind == DivisorKind::HorizontalSeparating) add_path(connect_horizontal_separating(d, sig));
        if (d.kind == DivisorKind::Vertical) add_path(path_vertical_to_dhirr(d, sig));
      }
    }
    if (indexed_ && sig.size() >= 3) {
      std::vector<IndexClass> same;
      for (const auto& cls : index_classes(sig.order_gcd())) {
        if (rotation_of_index(cls) == *c_.rotation) same.push_back(cls);
      }
      for (std::size_t i = 0; i < same.size(); ++i) {
        for (std::size_t j = i + 1; j < same.size(); ++j) add_path(genus1_index_walk(sig, same[i], same[j]));
      }
    }

    for (const auto& d : base) {
      const auto& g = d.graph;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices[v].genus >= 1 && free_of_residue_conditions(g, v)) {
          auto r = insert_horizontal_loop(g, v, sig);
          if (r.witness && within_caps(*r.witness)) {
            add_witness(d, *r.witness, r.linked.at(1), r.move, r.parameters);
          }
        }
      }
      if (d.kind == DivisorKind::Vertical) pull_edges(d);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices[v].genus == 0 && free_of_residue_conditions(g, v)) split_edges(d, v);
      }
    }
  }

  void pull_edges(const BoundaryDivisor& d) {
    const auto& sig = c_.signature;
    for (auto [dir, level] : {std::pair{Direction::Up, 0}, std::pair{Direction::Down, -1}}) {
      if (d.graph.vertices_at_level(level).size() < 2) continue;
      for (int v : d.graph.vertices_at_level(level)) {
        LevelGraph w;
        LevelGraph face;
        try {
          w = pull_vertex(d.graph, v, dir, sig);
          face = collapse_level_transition(w, dir == Direction::Up ? -1 : 0, sig);
        } catch (const Error&) {
          continue;
        }
        add_witness(d, w, face, "pull_vertex",
                    "vertex " + std::to_string(v) + (dir == Direction::Up ? " up" : " down"));
      }
    }
  }

  void split_edges(const BoundaryDivisor& d, int v) {
    const auto& sig = c_.signature;
    const auto half = half_edges_at(d.graph, v);
    const int k = static_cast<int>(half.size());
    if (k < 4 || k > 16) return;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      const int size = std::popcount(mask);
      if (size < 2 || k - size < 2) continue;
      std::vector<HalfEdge> subset;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) subset.push_back(half[static_cast<std::size_t>(i)]);
      }
      std::vector<MoveResult> results;
      try {
        results = split_vertex(d.graph, v, subset, sig);
      } catch (const Error&) {
        continue;
      }
      for (const auto& r : results) {
        if (within_caps(*r.witness)) add_witness(d, *r.witness, r.result, r.move, r.parameters);
      }
    }
  }

  void oracle_edges() {
    const auto& sig = c_.signature;
    if (indexed_) {
      throw Error(ErrorCode::PreconditionFail,
                  "oracle mode cannot resolve index decorations of " + sig.to_string());
    }
    if (!c_.exhaustive) {
      throw Error(ErrorCode::CapExceeded, "caps " + std::to_string(caps_.max_vertices) + "," +
                                              std::to_string(caps_.max_edges) + " are not exhaustive for " +
                                              sig.to_string());
    }
    for (auto [levels, horizontal] : {std::pair{3, 0}, std::pair{2, 1}, std::pair{1, 2}}) {
      for (const auto& w : enumerate_level_graphs(sig, levels, horizontal, caps_).graphs) {
        std::vector<LevelGraph> faces;
        try {
          faces = undegenerations(w, sig);
        } catch (const Error&) {
          continue;
        }
        if (faces.size() != 2) continue;
        const auto from = make_divisor(faces[0], sig);
        add_witness(from, w, faces[1], "codimension-2 graph", canonical_form(w));
      }
    }
  }

  BoundaryComplex c_;
  Caps caps_;
  bool indexed_ = false;
};

}  // namespace

BoundaryComplex build_boundary_complex(const Signature& sig, const Caps& caps, ComplexMode mode,
                                       std::optional<int> rotation) {
  return Builder(sig, caps, mode, rotation).build();
}

ConnectivityReport is_connected(const BoundaryComplex& complex) {
  ConnectivityReport report;
  if (complex.nodes.empty()) {
    report.no_boundary = true;
    return report;
  }
  std::map<std::string, std::size_t> id;
  std::vector<std::string> keys;
  for (const auto& [key, d] : complex.nodes) {
    id.emplace(key, keys.size());
    keys.push_back(key);
  }
  UnionFind uf(keys.size());
  for (const auto& [pair, edge] : complex.edges) uf.unite(id.at(pair.first), id.at(pair.second));
  std::map<std::size_t, std::string> reps;
  for (std::size_t i = 0; i < keys.size(); ++i) reps.try_emplace(uf.find(i), keys[i]);
  for (const auto& [root, key] : reps) report.representatives.push_back(key);
  std::sort(report.representatives.begin(), report.representatives.end());
  report.components = static_cast<int>(report.representatives.size());
  report.connected = report.components == 1;
  return report;
}

}  // namespace strata
