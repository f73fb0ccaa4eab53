#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace detail {

inline mpz_class mpz_from_int64(std::int64_t v) {
  static_assert(sizeof(long) == 8, "LP64 assumed");
  return mpz_class(static_cast<long>(v));
}

mpz_class mpz_from_int128(__int128 v);

}  // namespace detail

/// Exact rational number backed by GMP. Always stored reduced with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(std::int64_t n) : v_(detail::mpz_from_int64(n)) {}
  Rational(const mpz_class& n) : v_(n) {}

  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw ZeroDenominator();
    v_.canonicalize();
  }

  Rational(std::int64_t num, std::int64_t den)
      : Rational(detail::mpz_from_int64(num), detail::mpz_from_int64(den)) {}

  /// Parses "p/q" or "p" (optional sign on either part).
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Lowest-terms "p/q" with q > 0; plain "p" for integers.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw ZeroDenominator();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Greatest integer <= x (floor toward -infinity).
mpz_class floor_int(const Rational& x);

/// The integer closest to r, computed as floor(r + 1/2); ties round up.
mpz_class nearest_int(const Rational& r);

/// x - floor(x), in [0, 1).
Rational frac(const Rational& x);

/// Sawtooth ((x)): 0 on integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

}  // namespace brieskorn
