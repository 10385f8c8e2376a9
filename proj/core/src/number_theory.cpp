#include "strata/number_theory.hpp"

#include <numeric>

#include "strata/error.hpp"
#include "strata/union_find.hpp"

namespace strata {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::NonPositive, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NonPositive, "divisors of " + std::to_string(n));
  std::vector<std::int64_t> small, large;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NonPositive, "euler_phi(" + std::to_string(n) + ")");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational cusp_count_formula(std::int64_t m, std::int64_t r) {
  if (m < 1 || r < 1) throw Error(ErrorCode::NonPositive, "cusp formula needs m, r >= 1");
  if (m % r != 0) {
    throw Error(ErrorCode::NotDivisor,
                std::to_string(r) + " does not divide " + std::to_string(m));
  }
  const std::int64_t level = m / r;
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(level)) sum += euler_phi(d) * euler_phi(level / d);
  return Rational(sum, 2);
}

std::int64_t cusp_count_oracle(CuspQuery query) {
  const std::int64_t n = query.level;
  if (n < 1) throw Error(ErrorCode::NonPositive, "cusp level must be >= 1");
  auto index = [n](std::int64_t a, std::int64_t c) {
    return static_cast<std::size_t>(((a % n + n) % n) * n + ((c % n + n) % n));
  };
  UnionFind orbits(static_cast<std::size_t>(n * n));
  std::vector<bool> primitive(static_cast<std::size_t>(n * n), false);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t c = 0; c < n; ++c) {
      if (std::gcd(std::gcd(a, c), n) != 1) continue;
      primitive[index(a, c)] = true;
      orbits.unite(index(a, c), index(-a, -c));
      for (std::int64_t j = 1; j < n; ++j) orbits.unite(index(a, c), index(a + j * c, c));
    }
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < primitive.size(); ++i) {
    if (primitive[i] && orbits.find(i) == i) ++count;
  }
  return count;
}

}  // namespace strata
