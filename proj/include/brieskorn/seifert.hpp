#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

/// A validated Brieskorn tuple together with the Seifert data every
/// downstream formula consumes.
struct BrieskornData {
  std::vector<std::int64_t> a;      // pairwise coprime fiber orders, each >= 2
  std::int64_t A = 0;               // product of the a_i
  std::vector<std::int64_t> b;      // b_i = A / a_i
  std::vector<std::int64_t> beta;   // beta_i b_i = -1 (mod a_i), 0 <= beta_i < a_i
  std::vector<std::int64_t> q;      // q_i = beta_i^{-1} = -b_i (mod a_i)
  Rational kappa;                   // (n-2) - sum 1/a_i
  Rational ell;                     // -1/A
  std::int64_t u = 0;               // sum b_i
  Rational rho;                     // {kappa/(2 ell)}: 1/2 for A even, 0 for A odd
  std::int64_t m = 0;               // kappa/(2 ell) - rho, always an integer
  std::vector<std::int64_t> gamma;  // gamma_i = m beta_i (mod a_i)

  std::size_t n() const { return a.size(); }
};

bool is_pairwise_coprime(std::span<const std::int64_t> a);

/// Derives the full Seifert data for a tuple. The input need not be sorted.
/// Throws TooFewFibers, BadGenerator, NotPairwiseCoprime, Overflow.
BrieskornData derive(std::span<const std::int64_t> a);
BrieskornData derive(std::initializer_list<std::int64_t> a);

/// Streams every sorted pairwise-coprime tuple 2 <= a_1 < ... < a_n with
/// product <= max_product, in lexicographic order, each exactly once.
void enumerate_tuples(int n, std::int64_t max_product,
                      const std::function<void(std::span<const std::int64_t>)>& yield);

std::vector<std::vector<std::int64_t>> enumerate_tuples(int n,
                                                        std::int64_t max_product);

}  // namespace brieskorn
