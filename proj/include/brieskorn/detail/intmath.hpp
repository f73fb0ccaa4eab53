#pragma once

#include <cstdint>
#include <utility>

#include "brieskorn/errors.hpp"

namespace brieskorn::detail {

/// Floor division and non-negative remainder; b must be positive.
inline std::pair<std::int64_t, std::int64_t> floor_divmod(std::int64_t a,
                                                          std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  if (r < 0) {
    r += b;
    --q;
  }
  return {q, r};
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return floor_divmod(a, b).second;
}

/// Modular inverse of a mod m (m >= 1, gcd(a, m) = 1), by the extended
/// Euclidean algorithm. Result is in [0, m).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw Error("modulus must be positive");
  a = floor_mod(a, m);
  std::int64_t r0 = m, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw NotCoprime(a, m);
  return floor_mod(t0, m);
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Overflow("integer product overflows");
  return out;
}

}  // namespace brieskorn::detail
