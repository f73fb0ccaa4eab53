#pragma once

#include <cstdint>

#include "brieskorn/rational.hpp"
#include "brieskorn/seifert.hpp"

namespace brieskorn {

/// Argument pack of a Dedekind-Rademacher sum s(h, k; x, y).
struct RademacherParams {
  std::int64_t h = 0;
  std::int64_t k = 1;  // k >= 1
  Rational x;
  Rational y;
};

/// Classical Dedekind sum s(h,k) = sum_{mu=1}^{k-1} ((mu/k)) ((h mu/k)),
/// by direct summation. k = 1 gives the empty sum 0.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

/// s(h,k;x,y) = sum_{mu=0}^{k-1} (((mu+y)/k)) ((h(mu+y)/k + x)), by direct
/// summation. Tolerates any h, including gcd(h,k) > 1.
Rational rademacher_sum(const RademacherParams& p);

/// Same value as rademacher_sum, via reciprocity descent in O(log k)
/// arithmetic steps. Throws NotCoprime when gcd(h,k) != 1.
Rational rademacher_sum_fast(const RademacherParams& p);

/// s(beta,a) = -s(b,a) where beta b = -1 (mod a). Throws NotCoprime.
bool check_identity_ele0(std::int64_t b, std::int64_t a);

/// s(beta_i,a_i;(gamma_i+beta_i/2)/a_i,-1/2) =
///   -s(b_i,a_i;1/2,1/2) - 1/2 (((q_i gamma_i + 1/2)/a_i)).
/// Requires A even (throws WrongParity). i is a 0-based index.
bool check_identity_ele(const BrieskornData& data, std::size_t i);

/// s(beta_i,a_i;gamma_i/a_i,0) + 1/2 ((q_i gamma_i/a_i)) =
///   -s(b_i,a_i;1/2,1/2).
/// Requires A odd (throws WrongParity). i is a 0-based index.
bool check_identity_ele1(const BrieskornData& data, std::size_t i);

namespace detail {

// Both descent lanes are exposed so tests can pin each against direct
// summation. rademacher_sum_fast picks the integer lane when its overflow
// guards hold and falls back to the big-rational lane otherwise.
Rational rademacher_descent_int(const RademacherParams& p);
Rational rademacher_descent_mpq(const RademacherParams& p);

}  // namespace detail

}  // namespace brieskorn
