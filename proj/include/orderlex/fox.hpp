#pragma once

#include <map>
#include <vector>

#include "orderlex/free_group.hpp"
#include "orderlex/matrix.hpp"

namespace orderlex {

/// Finite Q-linear combination of reduced words. Zero coefficients are never stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement basis(const FreeWord& w, const Rational& c = Rational(1));

  const std::map<FreeWord, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const FreeWord& w, const Rational& c);
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<FreeWord, Rational> terms_;
};

/// Fox derivative d(w)/d(x_generator) in the group ring of the free group.
/// With a non-negative `generator_count`, throws std::out_of_range for
/// generators outside 0..generator_count-1.
GroupRingElement fox_derivative(const FreeWord& w, int generator, int generator_count = -1);

/// Ring homomorphism Q[F] -> Mat_k(Q[t, t^-1]) extending g -> rep(g) * t^phi(g).
class Specializer {
 public:
  /// One invertible k x k matrix and one integer weight per generator.
  Specializer(std::vector<RationalMatrix> generator_matrices, std::vector<int> weights);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t generator_count() const noexcept { return matrices_.size(); }

  /// Rational part and t-exponent of the image of a group element.
  std::pair<RationalMatrix, int> image(const FreeWord& w) const;
  PolynomialMatrix specialize(const GroupRingElement& x) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalMatrix> matrices_;
  std::vector<RationalMatrix> inverses_;
  std::vector<int> weights_;
};

/// Convenience wrapper for Specializer(...).specialize(x).
PolynomialMatrix specialize(const GroupRingElement& x, const std::vector<RationalMatrix>& generator_matrices,
                            const std::vector<int>& weights);

}  // namespace orderlex
