#include "orderlex/matrix.hpp"

#include <sstream>

namespace orderlex {

RationalMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("rational_matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(rows[r][c]);
  }
  return m;
}

LaurentPolynomial char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  // poly holds coefficients from the highest degree down: poly[0] = 1.
  std::vector<Rational> poly{Rational(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading principal block is m[0..r)x[0..r); border row R, column S, corner a.
    std::vector<Rational> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<Rational> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      Rational dot(0);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * s[i];
      toeplitz[k] = -dot;
      std::vector<Rational> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
      s = std::move(next);
    }
    std::vector<Rational> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += toeplitz[i - j] * poly[j];
    poly = std::move(updated);
  }
  std::vector<Rational> ascending(poly.rbegin(), poly.rend());
  return LaurentPolynomial(0, std::move(ascending));
}

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = input.rows();
  RationalMatrix m = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    m.swap_rows(pivot, k);
    inv.swap_rows(pivot, k);
    Rational scale = Rational(1) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) *= scale;
      inv(k, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

LaurentPolynomial determinant(const PolynomialMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPolynomial(1);
  PolynomialMatrix m = input;
  LaurentPolynomial previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(v, previous);
      }
      m(i, k) = LaurentPolynomial();
    }
    previous = m(k, k);
  }
  LaurentPolynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

PolynomialMatrix to_polynomial(const RationalMatrix& m, int exponent) {
  PolynomialMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out(r, c) = LaurentPolynomial::monomial(m(r, c), exponent);
  return out;
}

RationalMatrix matrix_power(const RationalMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw std::invalid_argument("matrix_power: matrix is not square");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace orderlex
