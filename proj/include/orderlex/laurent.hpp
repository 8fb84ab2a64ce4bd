#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orderlex/rational.hpp"

namespace orderlex {

/// Element of Q[t, t^-1]. Stored densely from the lowest nonzero exponent;
/// the zero polynomial has no coefficients. Leading and trailing
/// coefficients are always nonzero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant);  // NOLINT(implicit)
  LaurentPolynomial(long constant) : LaurentPolynomial(Rational(constant)) {}  // NOLINT
  LaurentPolynomial(int constant) : LaurentPolynomial(Rational(constant)) {}   // NOLINT

  /// coefficients[i] is the coefficient of t^(low + i).
  LaurentPolynomial(int low, std::vector<Rational> coefficients);

  static LaurentPolynomial monomial(const Rational& coefficient, int exponent);
  static LaurentPolynomial variable() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Nonzero constant times a power of t.
  bool is_unit() const noexcept { return coeffs_.size() == 1; }
  bool is_constant() const noexcept { return coeffs_.size() == 1 && low_ == 0; }

  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high_degree - low_degree; the Euclidean size of Q[t, t^-1]. -1 for zero.
  int span() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coefficient(int exponent) const;
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  const Rational& trailing_coefficient() const { return coeffs_.front(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Multiplication by t^k.
  LaurentPolynomial shifted(int k) const;
  Rational evaluate(const Rational& x) const;
  LaurentPolynomial derivative() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// "t^2 - 3*t + 1": descending exponents, explicit '*', "t^-1" for negative powers.
  std::string to_string() const;
  /// Accepts to_string() output plus parentheses, products and integer powers.
  static LaurentPolynomial parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

struct LaurentDivision {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};

/// a = q*b + r with span(r) < span(b). Throws std::domain_error when b = 0.
LaurentDivision divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Canonical unit multiple: lowest exponent 0, integer coefficients with
/// content 1 and a positive leading coefficient. Zero maps to zero.
LaurentPolynomial canonicalize(const LaurentPolynomial& p);

/// Canonical gcd; gcd(0, 0) = 0.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// p(t^d) for d >= 1.
LaurentPolynomial substitute_power(const LaurentPolynomial& p, int d);

/// True iff q = p*r for some Laurent polynomial r. Throws for p = 0.
bool divides(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// q / p when the division is exact; throws std::domain_error otherwise.
LaurentPolynomial exact_quotient(const LaurentPolynomial& q, const LaurentPolynomial& p);

/// Equality up to multiplication by a unit c*t^k.
inline bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return canonicalize(a) == canonicalize(b);
}

}  // namespace orderlex
