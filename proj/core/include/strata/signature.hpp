#pragma once

#include <span>
#include <string>
#include <vector>

namespace strata {

/// The signature of a stratum H_g(m_1, ..., m_n): a genus and the orders of
/// the differential at n labeled points. Point labels are 1-based positions.
///
/// Instances only exist in validated form: the orders sum to 2g - 2 and the
/// list is non-empty.
class Signature {
 public:
  static Signature make(int genus, std::vector<int> orders);

  int genus() const noexcept { return genus_; }
  int size() const noexcept { return static_cast<int>(orders_.size()); }
  std::span<const int> orders() const noexcept { return orders_; }
  // 1-based point label.
  int order(int point) const { return orders_.at(point - 1); }

  // No negative order. Zero orders (marked points) are allowed.
  bool holomorphic() const noexcept;
  // gcd(|m_1|, ..., |m_n|); 0 only if every order is 0.
  int order_gcd() const noexcept;

  // "H_2(1,1)"
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature(int genus, std::vector<int> orders)
      : genus_(genus), orders_(std::move(orders)) {}

  int genus_;
  std::vector<int> orders_;
};

Signature validate_signature(int genus, std::vector<int> orders);

// 2g + n - 2 for holomorphic signatures, 2g + n - 3 otherwise.
int projective_dimension(const Signature& sig) noexcept;

}  // namespace strata
