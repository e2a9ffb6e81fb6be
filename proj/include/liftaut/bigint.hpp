#ifndef LIFTAUT_BIGINT_HPP
#define LIFTAUT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liftaut {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// Representative of a in [0, m) for m > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::string to_string(const BigInt& a) { return a.str(); }

inline std::int64_t to_int64(const BigInt& a) {
  return a.convert_to<std::int64_t>();
}

/// Smallest prime factor of m > 1.
inline std::uint64_t smallest_prime_factor(std::uint64_t m) {
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return d;
  return m;
}

inline bool is_squarefree(std::uint64_t m) {
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

/// True when m = p^k for a prime p and k >= 1.
inline bool is_prime_power(std::uint64_t m) {
  if (m < 2) return false;
  const std::uint64_t p = smallest_prime_factor(m);
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace liftaut

#endif  // LIFTAUT_BIGINT_HPP
