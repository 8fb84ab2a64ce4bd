#include "orderlex/fox.hpp"

#include <stdexcept>

namespace orderlex {

GroupRingElement GroupRingElement::basis(const FreeWord& w, const Rational& c) {
  GroupRingElement x;
  x.add(w, c);
  return x;
}

void GroupRingElement::add(const FreeWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
  return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int generator, int generator_count) {
  if (generator < 0 || (generator_count >= 0 && generator >= generator_count))
    throw std::out_of_range("fox_derivative: unknown generator");
  // d(uv) = du + u dv; d(x) = 1, d(x^-1) = -x^-1.
  GroupRingElement out;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    const FreeWord letter = l.inverse ? FreeWord::generator(l.generator).inverse() : FreeWord::generator(l.generator);
    if (l.generator == generator) {
      if (l.inverse) {
        out.add(prefix * letter, Rational(-1));
      } else {
        out.add(prefix, Rational(1));
      }
    }
    prefix *= letter;
  }
  return out;
}

Specializer::Specializer(std::vector<RationalMatrix> generator_matrices, std::vector<int> weights)
    : matrices_(std::move(generator_matrices)), weights_(std::move(weights)) {
  if (matrices_.empty()) throw std::invalid_argument("Specializer: no generators");
  if (weights_.size() != matrices_.size())
    throw std::invalid_argument("Specializer: weight count differs from generator count");
  dimension_ = matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (!m.is_square() || m.rows() != dimension_)
      throw std::invalid_argument("Specializer: generator matrices must share one square shape");
    try {
      inverses_.push_back(inverse(m));
    } catch (const std::domain_error&) {
      throw std::invalid_argument("Specializer: generator image is not invertible");
    }
  }
}

std::pair<RationalMatrix, int> Specializer::image(const FreeWord& w) const {
  RationalMatrix acc = RationalMatrix::identity(dimension_);
  int exponent = 0;
  for (const auto& l : w.letters()) {
    const auto g = static_cast<std::size_t>(l.generator);
    if (g >= matrices_.size()) throw std::invalid_argument("Specializer: unknown generator in word");
    acc = acc * (l.inverse ? inverses_[g] : matrices_[g]);
    exponent += l.inverse ? -weights_[g] : weights_[g];
  }
  return {std::move(acc), exponent};
}

PolynomialMatrix Specializer::specialize(const GroupRingElement& x) const {
  PolynomialMatrix out(dimension_, dimension_);
  for (const auto& [w, c] : x.terms()) {
    auto [m, e] = image(w);
    for (std::size_t r = 0; r < dimension_; ++r)
      for (std::size_t col = 0; col < dimension_; ++col)
        if (m(r, col) != 0) out(r, col) += LaurentPolynomial::monomial(c * m(r, col), e);
  }
  return out;
}

PolynomialMatrix specialize(const GroupRingElement& x, const std::vector<RationalMatrix>& generator_matrices,
                            const std::vector<int>& weights) {
  return Specializer(generator_matrices, weights).specialize(x);
}

}  // namespace orderlex
