#include "strata/components.hpp"

#include <algorithm>
#include <numeric>

#include "strata/error.hpp"
#include "strata/number_theory.hpp"

namespace strata {

ComponentLabel ComponentLabel::rotation(int r) {
  if (r < 1) throw Error(ErrorCode::NonPositive, "rotation number must be positive");
  return ComponentLabel(Kind::Genus1Rotation, r, {});
}

std::string ComponentLabel::to_string() const {
  switch (kind_) {
    case Kind::Single: return "single";
    case Kind::Genus1Rotation: return "r=" + std::to_string(rotation_);
    case Kind::HigherGenusOpaque: return "opaque:" + tag_;
  }
  return "?";
}

IndexClass::IndexClass(int index, int modulus) : index_(index), modulus_(modulus) {
  if (modulus < 1) throw Error(ErrorCode::NonPositive, "index modulus must be positive");
  if (index < 1 || index > modulus) {
    throw Error(ErrorCode::PreconditionFail, "index " + std::to_string(index) +
                                                 " outside 1.." + std::to_string(modulus));
  }
}

int IndexClass::canonical() const noexcept {
  const int mirrored = modulus_ - index_ == 0 ? modulus_ : modulus_ - index_;
  return std::min(index_, mirrored);
}

std::vector<ComponentLabel> genus1_components(const Signature& sig) {
  if (sig.genus() != 1) {
    throw Error(ErrorCode::WrongGenus, sig.to_string() + " is not a genus-1 stratum");
  }
  if (sig.holomorphic()) {
    throw Error(ErrorCode::NoPole, sig.to_string() + " has no pole; it is connected");
  }
  std::vector<ComponentLabel> out;
  if (sig.size() == 2) {
    const int m = std::abs(sig.order(1));
    for (auto r : divisors(m)) {
      if (r < m) out.push_back(ComponentLabel::rotation(static_cast<int>(r)));
    }
    return out;
  }
  for (auto r : divisors(sig.order_gcd())) out.push_back(ComponentLabel::rotation(static_cast<int>(r)));
  return out;
}

std::vector<IndexClass> index_classes(int d) {
  if (d < 1) throw Error(ErrorCode::NonPositive, "index modulus must be positive");
  std::vector<IndexClass> out;
  for (int i = 1; i <= d; ++i) {
    IndexClass c(i, d);
    if (c.canonical() == i) out.push_back(c);
  }
  return out;
}

int rotation_of_index(const IndexClass& index) noexcept {
  return std::gcd(index.index(), index.modulus());
}

}  // namespace strata
