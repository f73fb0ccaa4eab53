#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/seifert.hpp"

namespace brieskorn {

struct IntervalCount {
  Rational lo;  // open interval (lo, hi)
  Rational hi;
  std::int64_t count = 0;
};

struct LatticeHit {
  std::vector<std::int64_t> point;
  Rational q;
};

/// Census of q over the parallelepiped P, with the simplex count and the
/// Mordell sum as cross-checks.
struct LatticeCensus {
  std::int64_t C = 0;              // #Delta, by direct enumeration
  std::int64_t mordell_value = 0;  // sum over P of (r(q)-1)(r(q)-2); equals 4C
  std::vector<IntervalCount> census;
  std::vector<LatticeHit> half_integer_hits;  // q on a partition endpoint
  bool counts_match = false;           // first census cell == C
  bool involution_symmetric = false;   // census is a palindrome
};

/// C = #{x in Z^n : x_i >= 0, sum x_i/a_i < kappa/2}, by enumeration of the
/// bounding box with early pruning. Any n >= 3; kappa <= 0 gives 0.
std::int64_t simplex_count(const BrieskornData& data);

/// d(x) = sum_i floor(x_i/a_i) for x in Delta. Throws NotInSimplex.
std::int64_t degree_vector(const BrieskornData& data,
                           std::span<const std::int64_t> x);

/// q(p) = sum_i (p_i + 1/2)/a_i for p in P. Throws OutOfBox.
Rational point_q(const BrieskornData& data, std::span<const std::int64_t> p);

/// The Mordell parallelepiped count: S = sum over P of (r(q)-1)(r(q)-2)
/// with r = nearest integer (n=3) or floor (n=4); returns S/4.
/// Throws UnsupportedDimension (n not 3,4) and InternalInconsistency
/// (S not divisible by 4).
std::int64_t mordell_count(const BrieskornData& data);

/// Counts q over the open partition cells of (0,n) — half-integer cuts for
/// n=3, integer cuts for n=4 — recording exact endpoint hits separately.
/// Throws UnsupportedDimension.
LatticeCensus interval_census(const BrieskornData& data);

/// omega(p) = (a_1-1-p_1, ..., a_n-1-p_n); q(omega(p)) = n - q(p).
/// Throws OutOfBox.
std::vector<std::int64_t> involution(const BrieskornData& data,
                                     std::span<const std::int64_t> p);

}  // namespace brieskorn
