#include "strata/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

Signature Signature::make(int genus, std::vector<int> orders) {
  if (genus < 0) {
    throw Error(ErrorCode::NegativeGenus, "genus " + std::to_string(genus) + " is negative");
  }
  if (orders.empty()) {
    throw Error(ErrorCode::EmptyOrderList, "a stratum needs at least one marked point");
  }
  const long sum = std::accumulate(orders.begin(), orders.end(), 0L);
  if (sum != 2L * genus - 2) {
    throw Error(ErrorCode::DegreeMismatch, "orders sum to " + std::to_string(sum) +
                                               ", expected 2g-2 = " +
                                               std::to_string(2 * genus - 2));
  }
  return Signature(genus, std::move(orders));
}

bool Signature::holomorphic() const noexcept {
  return std::none_of(orders_.begin(), orders_.end(), [](int m) { return m < 0; });
}

int Signature::order_gcd() const noexcept {
  int d = 0;
  for (int m : orders_) d = std::gcd(d, std::abs(m));
  return d;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "H_" << genus_ << "(";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << ",";
    os << orders_[i];
  }
  os << ")";
  return os.str();
}

Signature validate_signature(int genus, std::vector<int> orders) {
  return Signature::make(genus, std::move(orders));
}

int projective_dimension(const Signature& sig) noexcept {
  const int base = 2 * sig.genus() + sig.size();
  return sig.holomorphic() ? base - 2 : base - 3;
}

}  // namespace strata
