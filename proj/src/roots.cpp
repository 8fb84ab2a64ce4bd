#include "orderlex/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace orderlex {

namespace {

LaurentPolynomial require_nonzero(const LaurentPolynomial& p, const char* where) {
  if (p.is_zero()) throw std::domain_error(std::string(where) + ": zero polynomial");
  return canonicalize(p);
}

// Positive rescaling to a primitive integer polynomial; signs are preserved.
LaurentPolynomial positive_primitive(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial c = canonicalize(p).shifted(p.low_degree());
  return (p.leading_coefficient() > 0) ? c : -c;
}

// Remainder in Q[t] (not Q[t, t^-1]); both inputs have no negative powers.
LaurentPolynomial polynomial_remainder(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  std::vector<Rational> rem(static_cast<std::size_t>(a.high_degree() + 1));
  for (int e = a.low_degree(); e <= a.high_degree(); ++e) rem[static_cast<std::size_t>(e)] = a.coefficient(e);
  const int db = b.high_degree();
  for (int i = a.high_degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top / b.leading_coefficient();
    for (int e = b.low_degree(); e <= db; ++e) rem[static_cast<std::size_t>(i - db + e)] -= q * b.coefficient(e);
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return LaurentPolynomial(0, std::move(rem));
}

std::vector<LaurentPolynomial> sturm_chain(const LaurentPolynomial& square_free) {
  std::vector<LaurentPolynomial> chain{square_free, positive_primitive(square_free.derivative())};
  while (!chain.back().is_zero() && chain.back().high_degree() > 0) {
    LaurentPolynomial r = polynomial_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(positive_primitive(-r));
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<LaurentPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sgn(q.evaluate(x)));
  return sign_changes(signs);
}

int changes_at_infinity(const std::vector<LaurentPolynomial>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : sgn(q.leading_coefficient()));
  return sign_changes(signs);
}

}  // namespace

LaurentPolynomial square_free_part(const LaurentPolynomial& p) {
  LaurentPolynomial c = require_nonzero(p, "square_free_part");
  if (c.span() == 0) return c;
  return canonicalize(exact_quotient(c, gcd(c, c.derivative())));
}

std::vector<LaurentPolynomial> square_free_decomposition(const LaurentPolynomial& p) {
  LaurentPolynomial f = require_nonzero(p, "square_free_decomposition");
  std::vector<LaurentPolynomial> factors;
  if (f.span() == 0) return factors;
  LaurentPolynomial a = gcd(f, f.derivative());
  LaurentPolynomial b = exact_quotient(f, a);
  LaurentPolynomial c = exact_quotient(f.derivative(), a);
  LaurentPolynomial d = c - b.derivative();
  while (b.span() > 0) {
    LaurentPolynomial g = gcd(b, d);
    factors.push_back(g);
    LaurentPolynomial next_b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    b = next_b;
    d = c - b.derivative();
  }
  return factors;
}

int sturm_root_count(const LaurentPolynomial& p, const Rational& lo, const Rational& hi) {
  LaurentPolynomial sf = square_free_part(p);
  if (sf.span() == 0) return 0;
  if (sf.evaluate(lo) == 0) throw std::domain_error("sturm_root_count: lower endpoint is a root");
  auto chain = sturm_chain(sf);
  return changes_at(chain, lo) - changes_at(chain, hi);
}

int sturm_positive_root_count(const LaurentPolynomial& p) {
  // Canonical form has a nonzero constant term, so 0 is never a root.
  LaurentPolynomial sf = square_free_part(p);
  if (sf.span() == 0) return 0;
  auto chain = sturm_chain(sf);
  return changes_at(chain, Rational(0)) - changes_at_infinity(chain);
}

PositivityCheck all_roots_real_positive(const LaurentPolynomial& p) {
  LaurentPolynomial c = require_nonzero(p, "all_roots_real_positive");
  if (c.span() == 0) return {true, true};
  for (const auto& factor : square_free_decomposition(c)) {
    if (factor.span() == 0) continue;
    if (sturm_positive_root_count(factor) != factor.span()) return {false, false};
  }
  return {true, false};
}

}  // namespace orderlex
