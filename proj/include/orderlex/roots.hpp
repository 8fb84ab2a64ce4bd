#pragma once

#include <vector>

#include "orderlex/laurent.hpp"

namespace orderlex {

/// Square-free part p / gcd(p, p'), canonical. Throws for p = 0.
LaurentPolynomial square_free_part(const LaurentPolynomial& p);

/// Yun decomposition: factors[i] is the canonical product of the irreducible
/// factors of multiplicity i+1 (possibly 1). Throws for p = 0.
std::vector<LaurentPolynomial> square_free_decomposition(const LaurentPolynomial& p);

/// Number of distinct real roots in (0, inf), exact Sturm count.
int sturm_positive_root_count(const LaurentPolynomial& p);

/// Number of distinct real roots in (lo, hi] for lo < hi; p(lo) must be nonzero.
int sturm_root_count(const LaurentPolynomial& p, const Rational& lo, const Rational& hi);

struct PositivityCheck {
  bool all_real_positive = false;
  /// Set when p is a unit: the claim holds vacuously.
  bool vacuous = false;
};

/// Whether every complex root of p is real and positive.
PositivityCheck all_roots_real_positive(const LaurentPolynomial& p);

}  // namespace orderlex
