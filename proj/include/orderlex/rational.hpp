#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orderlex {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (mpq_class does not reduce on construction).
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (decimal, q != 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace orderlex
