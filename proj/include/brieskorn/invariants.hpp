#pragma once

#include <cstdint>

#include "brieskorn/rational.hpp"
#include "brieskorn/seifert.hpp"

namespace brieskorn {

/// Everything the identity -16C = F + sigma needs for one tuple, plus the
/// divisibility checks and the verdict.
struct KMReport {
  BrieskornData data;
  std::int64_t C = 0;
  Rational F;                // simplified formula route
  Rational F_seifert_form;   // unsimplified Seifert-data route; must equal F
  Rational sigma;
  Rational lambda_casson;    // sigma / 8
  std::int64_t chi_sw = 0;   // -2C
  std::int64_t lhs = 0;      // -16C
  Rational rhs;              // F + sigma; must equal the closed form
  int epsilon = 0;           // 1 for A even, -2 for A odd
  bool div8_F = false;
  bool div8_sigma = false;
  bool div16_sum = false;
  bool verdict = false;
};

/// F via the simplified formulas:
/// 1 + 4 sum s(b_i,a_i) + 8 sum s(b_i,a_i;1/2,1/2), minus 1/A when A is odd.
Rational ff_invariant(const BrieskornData& data);

/// F via the unsimplified Seifert-data route:
/// 1 [- 1/A if A odd] - 4 sum s(beta_i,a_i)
///   - 4 sum [ (((q_i gamma_i + rho)/a_i)) + 2 s(beta_i,a_i;(gamma_i+beta_i rho)/a_i,-rho) ].
Rational ff_invariant_seifert_form(const BrieskornData& data);

/// Milnor fiber signature:
/// -1 - (n-2)A/3 + 1/(3A) + (1/3) sum b_i/a_i - 4 sum s(b_i,a_i).
Rational signature(const BrieskornData& data);

/// Casson invariant, sigma/8. Integral for every valid tuple.
Rational casson(const BrieskornData& data);

/// chi of the Seiberg-Witten-Floer homology, -2C. Only n = 3,4.
std::int64_t chi_sw(const BrieskornData& data);

/// Closed form for F + sigma:
/// -(n-2)A/3 + eps/(3A) + (1/3) sum b_i/a_i + 8 sum s(b_i,a_i;1/2,1/2),
/// eps = 1 (A even) or -2 (A odd).
Rational km_rhs_closed_form(const BrieskornData& data);

/// Runs every check for one tuple. verdict is true iff
/// -16C = F + sigma = closed form, F = F_seifert_form,
/// F and sigma are integers divisible by 8, F + sigma by 16,
/// lambda is an integer and chi_sw - F/8 = lambda.
/// Only n = 3,4 (throws UnsupportedDimension).
KMReport km_verify(const BrieskornData& data);

}  // namespace brieskorn
