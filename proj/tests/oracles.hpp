#pragma once

// Test-only reference computations, deliberately naive and independent of the
// elimination code paths they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orderlex/laurent.hpp"
#include "orderlex/matrix.hpp"

namespace oracle {

using orderlex::LaurentPolynomial;
using orderlex::Matrix;
using orderlex::PolynomialMatrix;
using orderlex::Rational;

/// Determinant as the signed sum over all permutations.
template <typename T>
T leibniz_determinant(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// Invariant factors d_k / d_{k-1} from gcds of k x k minors.
inline std::vector<LaurentPolynomial> invariant_factors_by_minors(const PolynomialMatrix& m) {
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<LaurentPolynomial> divisors{LaurentPolynomial(1)};
  for (std::size_t k = 1; k <= steps; ++k) {
    LaurentPolynomial g;
    for (const auto& rows : subsets(m.rows(), k))
      for (const auto& cols : subsets(m.cols(), k)) {
        PolynomialMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        g = orderlex::gcd(g, leibniz_determinant(minor));
      }
    divisors.push_back(g);
  }
  std::vector<LaurentPolynomial> factors;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (divisors[k].is_zero()) {
      factors.emplace_back();
    } else {
      factors.push_back(orderlex::canonicalize(orderlex::exact_quotient(divisors[k], divisors[k - 1])));
    }
  }
  return factors;
}

/// Entries of degree <= max_degree with small integer coefficients. With
/// `structured`, rows are made dependent or share factors so that the Smith
/// form is non-trivial.
template <typename Rng>
PolynomialMatrix random_polynomial_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_degree,
                                          bool structured = false) {
  std::uniform_int_distribution<int> coeff(-2, 2), degree(0, max_degree), sparse(0, 3);
  PolynomialMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (sparse(rng) == 0) continue;
      std::vector<Rational> cs(static_cast<std::size_t>(degree(rng) + 1));
      for (auto& x : cs) x = coeff(rng);
      m(r, c) = LaurentPolynomial(0, cs);
    }
  if (structured) {
    switch (rng() % 3) {
      case 0:  // last row is a combination of the first two
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) + m(1, c);
        break;
      case 1: {  // first column scaled by (t - 1)
        const LaurentPolynomial f = LaurentPolynomial::parse("t - 1");
        for (std::size_t r = 0; r < rows; ++r)
          if (m(r, 0).high_degree() <= 1) m(r, 0) = m(r, 0) * f;
        break;
      }
      default:  // constant entries only in one block, making a diagonal-ish shape
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c)
            if (r != c) m(r, c) = LaurentPolynomial();
        break;
    }
  }
  return m;
}

/// Product of linear factors (t - r) with random rationals r (some repeated,
/// some negative, some zero) and the number of distinct positive r.
template <typename Rng>
std::pair<LaurentPolynomial, int> random_linear_product(Rng& rng) {
  std::uniform_int_distribution<int> count(1, 6), num(-6, 6), den(1, 4);
  std::set<Rational> positive;
  std::vector<Rational> roots;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rational r = orderlex::make_rational(num(rng), den(rng));
    if (!roots.empty() && rng() % 4 == 0) r = roots[rng() % roots.size()];
    roots.push_back(r);
    if (r > 0) positive.insert(r);
  }
  LaurentPolynomial p(1);
  for (const auto& r : roots) p = p * LaurentPolynomial(0, {-r, Rational(1)});
  return {p, static_cast<int>(positive.size())};
}

}  // namespace oracle
