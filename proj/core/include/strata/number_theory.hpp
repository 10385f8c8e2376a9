#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Totient: #{1 <= k <= n : gcd(k, n) = 1}. Throws NonPositive for n < 1.
std::int64_t euler_phi(std::int64_t n);

// (1/2) * sum over d | N of phi(d) phi(N/d), N = m / r, kept exact. The value is
// not the cusp count of X_1(N) at N <= 4; see cusp_count_oracle.
Rational cusp_count_formula(std::int64_t m, std::int64_t r);

struct CuspQuery {
  std::int64_t level = 1;
};

// Number of cusps of X_1(N), by brute-force orbit enumeration: vectors (a, c)
// mod N with gcd(a, c, N) = 1, under (a, c) ~ (a + j c, c) and (a, c) ~ (-a, -c).
std::int64_t cusp_count_oracle(CuspQuery query);

}  // namespace strata
