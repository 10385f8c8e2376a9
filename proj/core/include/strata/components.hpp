#pragma once

#include <string>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

// Label of a connected component of a stratum. Only genus 0 and genus 1 are
// classified here; higher genus components carry an opaque tag and make no
// completeness claim.
class ComponentLabel {
 public:
  enum class Kind { Single, Genus1Rotation, HigherGenusOpaque };

  // The stratum is connected (genus 0, or genus 1 with no poles).
  static ComponentLabel single() { return ComponentLabel(Kind::Single, 0, {}); }
  static ComponentLabel rotation(int r);
  static ComponentLabel opaque(std::string tag) {
    return ComponentLabel(Kind::HigherGenusOpaque, 0, std::move(tag));
  }

  Kind kind() const noexcept { return kind_; }
  int rotation_number() const noexcept { return rotation_; }
  const std::string& tag() const noexcept { return tag_; }
  std::string to_string() const;

  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;

 private:
  ComponentLabel(Kind kind, int rotation, std::string tag)
      : kind_(kind), rotation_(rotation), tag_(std::move(tag)) {}

  Kind kind_;
  int rotation_;
  std::string tag_;
};

// Index of an irreducible horizontal divisor in genus 1, modulo the
// identification I ~ d - I coming from relabeling the two simple poles.
class IndexClass {
 public:
  IndexClass(int index, int modulus);

  int index() const noexcept { return index_; }
  int modulus() const noexcept { return modulus_; }
  // min(I, d - I), with 0 read as d.
  int canonical() const noexcept;

  friend bool operator==(const IndexClass& a, const IndexClass& b) noexcept {
    return a.modulus_ == b.modulus_ && a.canonical() == b.canonical();
  }

 private:
  int index_;
  int modulus_;
};

// Components of a meromorphic genus-1 stratum, by rotation number, ascending.
// n = 2: r | m with r < m. n >= 3: every r | d.
std::vector<ComponentLabel> genus1_components(const Signature& sig);

// Canonical representatives of {1..d} under I ~ d - I, ascending.
std::vector<IndexClass> index_classes(int d);

// gcd(I, d).
int rotation_of_index(const IndexClass& index) noexcept;

}  // namespace strata
