#include "brieskorn/sums.hpp"

#include <numeric>
#include <utility>

#include "brieskorn/detail/intmath.hpp"

namespace brieskorn {

namespace {

using detail::floor_divmod;
using detail::floor_mod;
using detail::mpz_from_int128;
using detail::mpz_from_int64;

using int128 = __int128;

// Largest operand size for which the scaled integer lanes cannot overflow.
constexpr std::int64_t kIntLaneLimit = std::int64_t(1) << 25;

Rational dedekind_sum_generic(std::int64_t h, std::int64_t k) {
  Rational s;
  for (std::int64_t mu = 1; mu < k; ++mu)
    s += sawtooth(Rational(mu, k)) * sawtooth(Rational(h, 1) * Rational(mu, k));
  return s;
}

Rational rademacher_sum_generic(const RademacherParams& p) {
  Rational s;
  Rational k(p.k);
  for (std::int64_t mu = 0; mu < p.k; ++mu) {
    Rational t = (Rational(mu) + p.y) / k;
    s += sawtooth(t) * sawtooth(Rational(p.h) * t + p.x);
  }
  return s;
}

struct ScaledArg {
  std::int64_t num = 0;  // value = num/den, normalized to [0, 1)
  std::int64_t den = 1;
};

// Extracts frac(x) as an int64 fraction; fails for huge denominators.
bool to_scaled(const Rational& x, ScaledArg& out) {
  Rational f = frac(x);
  mpz_class num = f.num(), den = f.den();
  if (!num.fits_slong_p() || !den.fits_slong_p()) return false;
  out.num = num.get_si();
  out.den = den.get_si();
  return true;
}

}  // namespace

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k < 1) throw Error("k must be >= 1");
  if (k >= kIntLaneLimit) return dedekind_sum_generic(h, k);
  // Both factors scaled by 2k: ((mu/k)) -> 2 mu - k, ((h mu/k)) -> 2 r - k
  // with r = h mu mod k, zero terms skipped.
  const std::int64_t hm = floor_mod(h, k);
  int128 total = 0;
  std::int64_t r = 0;
  for (std::int64_t mu = 1; mu < k; ++mu) {
    r += hm;
    if (r >= k) r -= k;
    if (r == 0) continue;
    total += int128(2 * mu - k) * int128(2 * r - k);
  }
  return Rational(mpz_from_int128(total),
                  mpz_from_int64(2 * k) * mpz_from_int64(2 * k));
}

Rational rademacher_sum(const RademacherParams& p) {
  if (p.k < 1) throw Error("k must be >= 1");
  ScaledArg x, y;
  if (!to_scaled(p.x, x) || !to_scaled(p.y, y))
    return rademacher_sum_generic(p);
  const int128 m2_check = int128(p.k) * x.den * y.den;
  if (m2_check >= kIntLaneLimit * int128(kIntLaneLimit))
    return rademacher_sum_generic(p);

  // First factor over 2*M1, second over 2*M2:
  //   (mu + y)/k             = (mu dy + ny) / M1,        M1 = k dy
  //   h (mu + y)/k + x       = (h (mu dy + ny) dx + nx k dy) / M2,
  //                                                      M2 = k dy dx
  const std::int64_t k = p.k, dy = y.den, dx = x.den;
  const std::int64_t m1 = k * dy;
  const std::int64_t m2 = static_cast<std::int64_t>(m2_check);
  const std::int64_t hm = floor_mod(p.h, m2);
  int128 total = 0;
  for (std::int64_t mu = 0; mu < k; ++mu) {
    const std::int64_t n1 = mu * dy + y.num;
    const std::int64_t r1 = n1 >= m1 ? n1 - m1 : n1;  // n1 < 2*M1
    if (r1 == 0) continue;
    const int128 n2 = int128(hm) * n1 * dx + int128(x.num) * m1;
    const std::int64_t r2 = static_cast<std::int64_t>(n2 % m2);  // n2 >= 0
    if (r2 == 0) continue;
    total += int128(2 * r1 - m1) * int128(2 * r2 - m2);
  }
  return Rational(mpz_from_int128(total),
                  mpz_from_int64(2 * m1) * mpz_from_int64(2 * m2));
}

namespace detail {

namespace {

// Periodic second Bernoulli polynomial {t}^2 - {t} + 1/6.
Rational bernoulli2_bar(const Rational& t) {
  Rational f = frac(t);
  return f * f - f + Rational(1, 6);
}

}  // namespace

Rational rademacher_descent_mpq(const RademacherParams& p) {
  std::int64_t h = p.h, k = p.k;
  Rational x = frac(p.x), y = frac(p.y);
  Rational acc;
  int sign = 1;
  for (;;) {
    auto [quot, rem] = floor_divmod(h, k);
    x = frac(x + Rational(quot) * y);
    h = rem;
    if (k == 1) {
      acc += Rational(sign) * sawtooth(y) * sawtooth(Rational(h) * y + x);
      return acc;
    }
    Rational rhs = sawtooth(x) * sawtooth(y) +
                   Rational(1, 2) *
                       (Rational(h, k) * bernoulli2_bar(y) +
                        Rational(mpz_class(1), mpz_from_int64(h) * mpz_from_int64(k)) *
                            bernoulli2_bar(Rational(h) * y + Rational(k) * x) +
                        Rational(k, h) * bernoulli2_bar(x));
    if (x.is_integer() && y.is_integer()) rhs -= Rational(1, 4);
    acc += Rational(sign) * rhs;
    sign = -sign;
    std::swap(h, k);
    std::swap(x, y);
  }
}

Rational rademacher_descent_int(const RademacherParams& p) {
  ScaledArg xs, ys;
  if (!to_scaled(p.x, xs) || !to_scaled(p.y, ys) || p.k >= kIntLaneLimit)
    return rademacher_descent_mpq(p);
  const std::int64_t g = std::gcd(xs.den, ys.den);
  const std::int64_t d = xs.den / g * ys.den;  // common denominator
  if (d >= kIntLaneLimit) return rademacher_descent_mpq(p);

  std::int64_t h = p.h, k = p.k;
  std::int64_t nx = xs.num * (d / xs.den), ny = ys.num * (d / ys.den);
  Rational acc;
  std::int64_t sign = 1;
  for (;;) {
    auto [quot, rem] = floor_divmod(h, k);
    nx = static_cast<std::int64_t>(
        ((int128(quot) * ny + nx) % d + d) % d);  // frac(x + quot*y)
    h = rem;
    const std::int64_t sx = nx == 0 ? 0 : 2 * nx - d;  // ((x)) over 2d
    const std::int64_t sy = ny == 0 ? 0 : 2 * ny - d;
    if (k == 1) {
      // h = 0 here, so the single mu = 0 term is ((y)) ((x)).
      acc += Rational(mpz_from_int128(int128(sign) * sx * sy),
                      mpz_from_int64(4) * mpz_from_int64(d) * mpz_from_int64(d));
      return acc;
    }
    // Reciprocity step over the common denominator 12 h k d^2:
    //   s(h,k;x,y) + s(k,h;y,x) = ((x))((y))
    //     + 1/2 [ (h/k) B2(y) + (1/hk) B2(hy + kx) + (k/h) B2(x) ]
    //     - [x, y both integers] / 4
    const int128 dd = int128(d) * d;
    const int128 b2x = 6 * int128(nx) * nx - 6 * int128(nx) * d + dd;
    const int128 b2y = 6 * int128(ny) * ny - 6 * int128(ny) * d + dd;
    const std::int64_t v =
        static_cast<std::int64_t>((int128(h) * ny + int128(k) * nx) % d);
    const int128 b2t = 6 * int128(v) * v - 6 * int128(v) * d + dd;
    int128 num = 3 * int128(h) * k * sx * sy + int128(h) * h * b2y + b2t +
                 int128(k) * k * b2x;
    if (nx == 0 && ny == 0) num -= 3 * int128(h) * k * dd;
    const int128 den = 12 * int128(h) * k * dd;
    acc += Rational(mpz_from_int128(sign * num), mpz_from_int128(den));
    sign = -sign;
    std::swap(h, k);
    std::swap(nx, ny);
  }
}

}  // namespace detail

Rational rademacher_sum_fast(const RademacherParams& p) {
  if (p.k < 1) throw Error("k must be >= 1");
  if (std::gcd(floor_mod(p.h, p.k), p.k) != 1) throw NotCoprime(p.h, p.k);
  return detail::rademacher_descent_int(p);
}

bool check_identity_ele0(std::int64_t b, std::int64_t a) {
  if (a < 1) throw Error("a must be >= 1");
  if (std::gcd(floor_mod(b, a), a) != 1) throw NotCoprime(b, a);
  const std::int64_t beta =
      a == 1 ? 0 : floor_mod(-detail::mod_inverse(b, a), a);
  return dedekind_sum(beta, a) == -dedekind_sum(b, a);
}

bool check_identity_ele(const BrieskornData& data, std::size_t i) {
  if (i >= data.n()) throw Error("fiber index out of range");
  if (data.A % 2 != 0) throw WrongParity("identity requires A even");
  const std::int64_t a = data.a[i], beta = data.beta[i], q = data.q[i],
                     gamma = data.gamma[i], b = data.b[i];
  // x = (gamma + beta/2)/a, y = -1/2
  Rational lhs = rademacher_sum(
      {beta, a, Rational(2 * gamma + beta, 2 * a), Rational(-1, 2)});
  Rational rhs =
      -rademacher_sum({b, a, Rational(1, 2), Rational(1, 2)}) -
      Rational(1, 2) *
          sawtooth(Rational(mpz_from_int64(2) * mpz_from_int64(q) * mpz_from_int64(gamma) + 1,
                            mpz_from_int64(2 * a)));
  return lhs == rhs;
}

bool check_identity_ele1(const BrieskornData& data, std::size_t i) {
  if (i >= data.n()) throw Error("fiber index out of range");
  if (data.A % 2 == 0) throw WrongParity("identity requires A odd");
  const std::int64_t a = data.a[i], beta = data.beta[i], q = data.q[i],
                     gamma = data.gamma[i], b = data.b[i];
  Rational lhs =
      rademacher_sum({beta, a, Rational(gamma, a), Rational(0)}) +
      Rational(1, 2) *
          sawtooth(Rational(mpz_from_int64(q) * mpz_from_int64(gamma),
                            mpz_from_int64(a)));
  return lhs == -rademacher_sum({b, a, Rational(1, 2), Rational(1, 2)});
}

}  // namespace brieskorn
