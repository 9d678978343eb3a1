#pragma once

#include <cstdint>
#include <random>

#include "ccr/op_expr.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

/// Seeded generator of random algebra elements for property checks. Draws
/// use raw mt19937_64 output, so sequences are identical across standard
/// library implementations.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  /// Nonzero p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(unsigned max_num = 9, unsigned max_den = 9);
  ScalarCoeff scalar(bool complex = true);
  Word word(unsigned max_length);
  OpExpr expr(unsigned max_terms, unsigned max_length);
  /// Random coefficients up to max_degree; degree max_degree is always present.
  Polynomial polynomial(unsigned max_degree, bool complex = false);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ccr
