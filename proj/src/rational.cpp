#include "brieskorn/rational.hpp"

#include <cctype>
#include <ostream>

namespace brieskorn {

namespace detail {

mpz_class mpz_from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  hi <<= 64;
  hi += mpz_class(static_cast<unsigned long>(mag));
  return neg ? mpz_class(-hi) : hi;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

}  // namespace detail

Rational Rational::parse(std::string_view text) {
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!detail::valid_integer(den)) throw ParseError(std::string(text));
  }
  if (!detail::valid_integer(num)) throw ParseError(std::string(text));
  mpz_class n(std::string(num), 10);
  if (den.empty()) return Rational(n);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ZeroDenominator();
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class floor_int(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

mpz_class nearest_int(const Rational& r) {
  return floor_int(r + Rational(1, 2));
}

Rational frac(const Rational& x) { return x - Rational(floor_int(x)); }

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return frac(x) - Rational(1, 2);
}

}  // namespace brieskorn
