#include <random>

#include "doctest.h"
#include "orderlex/errors.hpp"
#include "orderlex/fox.hpp"
#include "orderlex/free_group.hpp"
#include "printing.hpp"

using namespace orderlex;

namespace {

FreeWord W(const char* text, int rank = 2) { return parse_word(text, rank); }

FreeEndomorphism figure_eight() {
  return FreeEndomorphism(2, {W("ab"), W("bab")}, std::vector<FreeWord>{W("aaB"), W("bA")});
}

// Unreduced random letter sequence; reduction is left to the code under test.
std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(0, rank - 1), sign(0, 1);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = {gen(rng), sign(rng) == 1};
  return out;
}

// Reduction by repeated scanning, independent of the stack-based reducer.
std::vector<Letter> naive_reduce(std::vector<Letter> s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i].generator == s[i + 1].generator && s[i].inverse != s[i + 1].inverse) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
  }
  return s;
}

FreeEndomorphism random_endomorphism(std::mt19937_64& rng, int rank) {
  std::vector<FreeWord> images;
  for (int g = 0; g < rank; ++g) images.push_back(FreeWord::reduce(random_letters(rng, rank, 5), rank));
  return FreeEndomorphism(rank, images);
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(W("abBa") == W("aa"));
  CHECK(W("aA").empty());
  CHECK(format_word(W("abA"), 2) == "abA");
  CHECK(W("abA").length() == 3);
  CHECK_THROWS_AS(FreeWord::reduce({{2, false}}, 2), std::out_of_range);
  CHECK(W("1").empty());
  CHECK(W("").empty());
  CHECK(format_word(FreeWord(), 2) == "1");
}

TEST_CASE("reduce agrees with naive cancellation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = random_letters(rng, 3, 14);
    CHECK(FreeWord::reduce(raw, 3).letters() == naive_reduce(raw));
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word("a b A", 2) == W("abA"));
  CHECK(format_word(parse_word("atT b", 2, true), 2, true) == "ab");
  CHECK(format_word(parse_word("tat", 2, true), 2, true) == "tat");
  CHECK_THROWS_AS(parse_word("at", 2), ParseError);
  CHECK_THROWS_AS(parse_word("ac", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a1", 2), ParseError);
  try {
    parse_word("ab?", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  // 't' is skipped in the fiber alphabet.
  CHECK(generator_symbol(18) == 's');
  CHECK(generator_symbol(19) == 'u');
  CHECK(parse_word("u", 20).letters().front().generator == 19);
}

TEST_CASE("apply") {
  const auto theta = figure_eight();
  CHECK(theta.apply(W("a")) == W("ab"));
  CHECK(theta.apply(W("A")) == W("BA"));
  CHECK(FreeEndomorphism::identity(2).apply(W("abAAb")) == W("abAAb"));
  CHECK_THROWS_AS(theta.apply(parse_word("c", 3)), std::invalid_argument);
}

TEST_CASE("apply respects reduction") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto e = random_endomorphism(rng, 3);
    auto raw = random_letters(rng, 3, 12);
    std::vector<Letter> image;
    for (const auto& l : raw) {
      const FreeWord& x = e.images()[static_cast<std::size_t>(l.generator)];
      const FreeWord piece = l.inverse ? x.inverse() : x;
      image.insert(image.end(), piece.letters().begin(), piece.letters().end());
    }
    CHECK(e.apply(FreeWord::reduce(raw, 3)).letters() == naive_reduce(image));
  }
}

TEST_CASE("certification") {
  const auto theta = figure_eight();
  CHECK(theta.is_certified());
  CHECK(compose(theta, theta.inverse()) == FreeEndomorphism::identity(2));
  CHECK(compose(theta.inverse(), theta) == FreeEndomorphism::identity(2));
  CHECK(compose(theta, FreeEndomorphism::identity(2)) == theta);
  FreeEndomorphism wrong(2, {W("ab"), W("bab")}, std::vector<FreeWord>{W("aB"), W("bA")});
  CHECK_FALSE(wrong.is_certified());
  CHECK_THROWS_AS(wrong.certify(), CertificationError);
  CHECK_THROWS_AS(FreeEndomorphism(2, {W("ab"), W("b")}).certify(), CertificationError);
  CHECK(compose(theta, theta).is_certified());
  CHECK(theta.power(3).is_certified());
  CHECK_THROWS_AS(compose(theta, FreeEndomorphism::identity(3)), std::invalid_argument);
}

TEST_CASE("abelianization") {
  const auto theta = figure_eight();
  CHECK(abelianization_matrix(theta) == rational_matrix({{1, 1}, {1, 2}}));
  CHECK(char_poly(abelianization_matrix(theta)) == LaurentPolynomial::parse("t^2 - 3*t + 1"));
  CHECK(abelianization_matrix(FreeEndomorphism::identity(3)) == RationalMatrix::identity(3));
  CHECK(abelianization_matrix(FreeEndomorphism(2, {W("A"), W("b")})) == rational_matrix({{-1, 0}, {0, 1}}));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto e1 = random_endomorphism(rng, 3), e2 = random_endomorphism(rng, 3);
    CHECK(abelianization_matrix(compose(e1, e2)) == abelianization_matrix(e1) * abelianization_matrix(e2));
  }
}

TEST_CASE("fox derivative examples") {
  CHECK(fox_derivative(W("ab"), 0) == GroupRingElement::basis(FreeWord()));
  CHECK(fox_derivative(W("ab"), 1) == GroupRingElement::basis(W("a")));
  CHECK(fox_derivative(W("A"), 0) == GroupRingElement::basis(W("A"), Rational(-1)));
  CHECK(fox_derivative(W("b"), 0).is_zero());
  CHECK_THROWS_AS(fox_derivative(W("ab"), 2, 2), std::out_of_range);
}

TEST_CASE("fox axioms and the fundamental identity") {
  std::mt19937_64 rng(13);
  const int rank = 3;
  const auto one = GroupRingElement::basis(FreeWord());
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord u = FreeWord::reduce(random_letters(rng, rank, 12), rank);
    const FreeWord v = FreeWord::reduce(random_letters(rng, rank, 12), rank);
    GroupRingElement sum;
    for (int g = 0; g < rank; ++g) {
      const auto du = fox_derivative(u, g), dv = fox_derivative(v, g);
      CHECK(fox_derivative(u * v, g) == du + GroupRingElement::basis(u) * dv);
      CHECK(fox_derivative(u.inverse(), g) ==
            GroupRingElement::basis(u.inverse(), Rational(-1)) * du);
      sum += du * (GroupRingElement::basis(FreeWord::generator(g)) - one);
    }
    CHECK(sum == GroupRingElement::basis(u) - one);
  }
}

TEST_CASE("specialize") {
  const FreeWord t = FreeWord::generator(2);
  const std::vector<RationalMatrix> trivial(3, RationalMatrix::identity(1));
  auto p = specialize(GroupRingElement::basis(t), trivial, {0, 0, 1});
  CHECK(p(0, 0) == LaurentPolynomial::variable());

  const std::vector<RationalMatrix> alpha{rational_matrix({{0, 1}, {1, 0}}), rational_matrix({{1, 1}, {0, 1}}),
                                          RationalMatrix::identity(2)};
  auto d = specialize(GroupRingElement::basis(W("a")) - GroupRingElement::basis(W("b")), alpha, {0, 0, 1});
  CHECK(d == to_polynomial(alpha[0] - alpha[1], 0));

  // Regular Z2 representation with f(a) = 0 and f(t) = 1.
  const std::vector<RationalMatrix> regular{RationalMatrix::identity(2), RationalMatrix::identity(2),
                                            rational_matrix({{0, 1}, {1, 0}})};
  auto ta = specialize(GroupRingElement::basis(t * FreeWord::generator(0)), regular, {0, 0, 1});
  CHECK(ta == to_polynomial(rational_matrix({{0, 1}, {1, 0}}), 1));

  CHECK_THROWS_AS(Specializer({rational_matrix({{1, 0}, {0, 0}})}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Specializer({RationalMatrix::identity(1), RationalMatrix::identity(2)}, {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937_64 rng(21);
  const std::vector<RationalMatrix> alpha{rational_matrix({{0, -1}, {1, 0}}), rational_matrix({{1, 1}, {0, 1}})};
  const Specializer s(alpha, {1, -2});
  for (int trial = 0; trial < 40; ++trial) {
    const FreeWord u = FreeWord::reduce(random_letters(rng, 2, 8), 2);
    const FreeWord v = FreeWord::reduce(random_letters(rng, 2, 8), 2);
    auto x = GroupRingElement::basis(u, Rational(2)) - GroupRingElement::basis(v);
    auto y = GroupRingElement::basis(v, Rational(3)) + GroupRingElement::basis(FreeWord());
    CHECK(s.specialize(x * y) == s.specialize(x) * s.specialize(y));
  }
}
