#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brieskorn {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed "p/q" text.
struct ParseError : Error {
  explicit ParseError(const std::string& text)
      : Error("cannot parse rational from \"" + text + "\"") {}
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
};

struct Overflow : Error {
  using Error::Error;
};

/// The reciprocity-based fast path needs gcd(h, k) = 1.
struct NotCoprime : Error {
  NotCoprime(std::int64_t h, std::int64_t k)
      : Error("arguments not coprime (" + std::to_string(h) + "," +
              std::to_string(k) + ")") {}
};

/// Identity requested for the wrong parity of A.
struct WrongParity : Error {
  using Error::Error;
};

struct NotPairwiseCoprime : Error {
  std::int64_t first;
  std::int64_t second;
  NotPairwiseCoprime(std::int64_t a, std::int64_t b)
      : Error("not pairwise coprime (" + std::to_string(a) + "," +
              std::to_string(b) + ")"),
        first(a),
        second(b) {}
};

struct TooFewFibers : Error {
  TooFewFibers() : Error("need at least 3 fibers") {}
};

struct BadGenerator : Error {
  explicit BadGenerator(std::int64_t a)
      : Error("fiber order must be >= 2, got " + std::to_string(a)) {}
};

struct NotInSimplex : Error {
  NotInSimplex() : Error("point is not in the simplex") {}
};

struct OutOfBox : Error {
  OutOfBox() : Error("point is outside the parallelepiped") {}
};

struct UnsupportedDimension : Error {
  explicit UnsupportedDimension(std::size_t n)
      : Error("supported only for n = 3,4 (got n = " + std::to_string(n) +
              ")") {}
};

/// A mathematically impossible state was reached; indicates a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace brieskorn
