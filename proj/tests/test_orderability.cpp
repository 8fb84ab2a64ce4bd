#include <random>

#include "doctest.h"
#include "orderlex/battery.hpp"
#include "orderlex/magnus.hpp"
#include "orderlex/roots.hpp"
#include "orderlex/verdict.hpp"
#include "printing.hpp"

using namespace orderlex;

namespace {

FreeWord W(const char* text, int rank = 2) { return parse_word(text, rank); }
LaurentPolynomial P(const char* text) { return LaurentPolynomial::parse(text); }

// Expansion by explicit sums over letter subsequences (no truncated-series
// arithmetic): the coefficient of X_{i1}..X_{ik} in prod (1 + X_g)^{+-1}.
std::int64_t naive_coefficient(const FreeWord& w, const std::vector<int>& monomial) {
  // Dynamic programming over letters; inverse letters contribute (-1)^j X_g^j.
  const auto& letters = w.letters();
  std::vector<std::int64_t> ways(monomial.size() + 1, 0);
  ways[0] = 1;
  for (const auto& l : letters) {
    std::vector<std::int64_t> next = ways;
    for (std::size_t done = 0; done < monomial.size(); ++done) {
      if (ways[done] == 0) continue;
      if (!l.inverse) {
        if (monomial[done] == l.generator) next[done + 1] += ways[done];
      } else {
        std::int64_t sign = -1;
        for (std::size_t j = done; j < monomial.size() && monomial[j] == l.generator; ++j, sign = -sign)
          next[j + 1] += sign * ways[done];
      }
    }
    ways = next;
  }
  return ways[monomial.size()];
}

}  // namespace

TEST_CASE("magnus expansion examples") {
  const auto a = magnus_expand(W("a"), 2, 4);
  CHECK(a.coefficient({}) == 1);
  CHECK(a.coefficient({0}) == 1);
  CHECK(a.coefficient({1}) == 0);
  CHECK(a.coefficient({0, 0}) == 0);
  const auto inv = magnus_expand(W("A"), 2, 5);
  for (int k = 0; k <= 5; ++k) CHECK(inv.coefficient(std::vector<int>(static_cast<std::size_t>(k), 0)) == (k % 2 ? -1 : 1));
  const auto c = magnus_expand(commutator(W("a"), W("b")), 2, 3);
  CHECK(c.coefficient({0}) == 0);
  CHECK(c.coefficient({1}) == 0);
  CHECK(c.coefficient({0, 1}) == 1);
  CHECK(c.coefficient({1, 0}) == -1);
  CHECK(c.coefficient({0, 0}) == 0);
  CHECK(magnus_expand(FreeWord(), 2, 3).to_string() == "1");
  CHECK(magnus_expand(W("a"), 2, 2).to_string() == "1 + X1");
  CHECK_THROWS_AS(MagnusSeries(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(MagnusSeries(30, 12), std::length_error);
}

TEST_CASE("magnus expansion matches the subsequence oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const FreeWord w = random_reduced_word(rng, n, 10);
    const auto s = magnus_expand(w, n, 4);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == naive_coefficient(w, s.monomial(i)));
    for (int g = 0; g < n; ++g) CHECK(s.coefficient({g}) == w.exponent_sum(g));
  }
}

TEST_CASE("magnus expansion is multiplicative") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const FreeWord u = random_reduced_word(rng, 3, 8), v = random_reduced_word(rng, 3, 8);
    CHECK(magnus_expand(u * v, 3, 5) == magnus_expand(u, 3, 5) * magnus_expand(v, 3, 5));
  }
}

TEST_CASE("monomial indexing is graded lexicographic") {
  const MagnusSeries s(2, 3);
  CHECK(s.size() == 15);
  CHECK(s.index_of({}) == 0);
  CHECK(s.index_of({0}) == 1);
  CHECK(s.index_of({1}) == 2);
  CHECK(s.index_of({0, 0}) == 3);
  CHECK(s.index_of({0, 1}) == 4);
  CHECK(s.index_of({1, 0}) == 5);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.monomial(i)) == i);
}

TEST_CASE("magnus comparison examples") {
  const FreeWord a = W("a"), b = W("b");
  CHECK(magnus_compare(a, FreeWord(), 2, 6) == Comparison::Greater);
  CHECK(magnus_compare(W("A"), FreeWord(), 2, 6) == Comparison::Less);
  CHECK(magnus_compare(a, a, 2, 6) == Comparison::Equal);
  CHECK(magnus_compare(commutator(a, b), b, 2, 6) == Comparison::Less);
  const FreeWord ab = commutator(a, b);
  REQUIRE(magnus_compare(ab, FreeWord(), 2, 6) == Comparison::Greater);
  CHECK(magnus_compare(commutator(a.power(2), b.power(2)), ab, 2, 6) == Comparison::Greater);
  // A fourth-order commutator is invisible at depth 3.
  const FreeWord deep = commutator(commutator(commutator(a, b), a), b);
  CHECK(magnus_compare(deep, FreeWord(), 2, 3) == Comparison::UnresolvedAtDepth);
  CHECK(magnus_compare(deep, FreeWord(), 2, 4) != Comparison::UnresolvedAtDepth);
}

TEST_CASE("commutator identities") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeWord a = random_reduced_word(rng, 3, 6), b = random_reduced_word(rng, 3, 6),
                   c = random_reduced_word(rng, 3, 6);
    CHECK(commutator(a, b * c) == commutator(a, c) * commutator(a, b) * commutator(commutator(a, b), c));
    CHECK(commutator(a * b, c) == commutator(a, c) * commutator(commutator(a, c), b) * commutator(b, c));
  }
}

TEST_CASE("sandwich at depth three") {
  const FreeWord x = W("a"), y = W("b");
  const FreeWord c = commutator(x, y), big = commutator(x.power(2), y.power(2));
  // Depth-2 parts: [x,y] ~ X1X2 - X2X1 and [x^2,y^2] ~ 4(X1X2 - X2X1).
  const auto s = magnus_expand(big, 2, 3);
  CHECK(s.coefficient({0, 1}) == 4);
  CHECK(s.coefficient({1, 0}) == -4);
  CHECK(magnus_compare(big.inverse(), c, 2, 3) == Comparison::Less);
  CHECK(magnus_compare(c, big, 2, 3) == Comparison::Less);
}

TEST_CASE("bi-order axioms") {
  const auto report = bi_order_axiom_suite(300, 6, 7);
  CHECK(report.violations == 0);
  CHECK(report.resolved + report.unresolved == 300);
  CHECK(report.resolved > 250);
}

TEST_CASE("commutator inequalities") {
  const auto report = commutator_lemma_suite(2, 200, 6, 9);
  CHECK(report.passed());
  CHECK(report.part1.resolved == 200);
  CHECK(report.part2.resolved == 200);
  CHECK(report.part3.resolved > 100);
  CHECK(report.sandwich.resolved > 100);
  const auto rank3 = commutator_lemma_suite(3, 100, 6, 10);
  CHECK(rank3.passed());
}

TEST_CASE("commutator subgroup convexity") {
  const auto report = convexity_suite(2, 300, 6, 5);
  CHECK(report.violations == 0);
  CHECK(report.resolved == 300);
}

TEST_CASE("suites are reproducible") {
  const auto first = commutator_lemma_suite(2, 50, 6, 123);
  const auto second = commutator_lemma_suite(2, 50, 6, 123);
  CHECK(first.part3.resolved == second.part3.resolved);
  CHECK(first.part3.unresolved == second.part3.unresolved);
  CHECK(first.sandwich.vacuous == second.sandwich.vacuous);
}

TEST_CASE("orderability verdicts") {
  auto v = clay_rolfsen_verdict(P("t^2 - 3*t + 1"));
  CHECK(v.status == OrderStatus::BiorderableByPerronRolfsen);
  CHECK(v.positive_root_count == 2);
  v = clay_rolfsen_verdict(P("t^2 - t + 1"));
  CHECK(v.status == OrderStatus::ObstructedNotBiorderable);
  CHECK(v.positive_root_count == 0);
  v = clay_rolfsen_verdict(P("(t - 2)*(t + 1)"));
  CHECK(v.status == OrderStatus::Inconclusive);
  CHECK(v.positive_root_count == 1);
  CHECK_THROWS_AS(clay_rolfsen_verdict(LaurentPolynomial()), std::domain_error);
  CHECK(to_string(OrderStatus::Inconclusive) == "inconclusive");
  // Unit invariance.
  for (const char* p : {"t^2 - 3*t + 1", "t^2 - t + 1", "(t - 2)*(t + 1)", "t^4 - 7*t^2 + 1"}) {
    const auto base = clay_rolfsen_verdict(P(p));
    const auto scaled = clay_rolfsen_verdict(P(p) * LaurentPolynomial::monomial(Rational(-3), -5));
    CHECK(base.status == scaled.status);
    CHECK(base.positive_root_count == scaled.positive_root_count);
  }
}

TEST_CASE("positive real eigenvalues") {
  CHECK(has_positive_real_eigenvalue(rational_matrix({{2, 1}, {1, 1}})));
  CHECK_FALSE(has_positive_real_eigenvalue(rational_matrix({{0, -1}, {1, 0}})));
  CHECK(has_positive_real_eigenvalue(rational_matrix({{3, -7, 2}, {0, 1, 5}, {0, 0, 2}})));
  CHECK_THROWS_AS(has_positive_real_eigenvalue(RationalMatrix(2, 3)), std::invalid_argument);
  const auto report = triangular_eigenvalue_suite(100, 3);
  CHECK(report.violations == 0);
  CHECK(report.resolved == 100);
}

TEST_CASE("cover and twisted verdicts agree on the figure-eight") {
  const auto m = figure_eight();
  const auto z2 = named_group("Z2").group;
  const auto r = theorem2_report(m, TorusHomomorphism(z2, {0, 0}, 1));
  CHECK(r.passed());
  CHECK(r.d == 2);
  CHECK_FALSE(r.gain());
  CHECK(r.twisted == P("t^4 - 7*t^2 + 1"));
  CHECK(r.twisted_verdict.positive_root_count == 2);
  CHECK(r.classical_verdict.status == OrderStatus::BiorderableByPerronRolfsen);

  const auto trivial = theorem2_report(m, TorusHomomorphism(named_group("1").group, {0, 0}, 0));
  CHECK(trivial.passed());
  CHECK_FALSE(trivial.gain());
  CHECK(trivial.twisted == trivial.classical);

  const auto z3 = theorem2_report(m, TorusHomomorphism(named_group("Z3").group, {0, 0}, 1));
  CHECK(z3.passed());
  CHECK(z3.d == 3);
  CHECK(z3.twisted_verdict.positive_root_count == z3.cover_verdict.positive_root_count);
}

TEST_CASE("a non-regular twisted polynomial can lose every positive root") {
  // Sign representation through t: the factor t^2 + 3t + 1 of the regular one.
  const auto m = figure_eight();
  FiniteRepresentation sign({RationalMatrix::identity(1), RationalMatrix::identity(1), rational_matrix({{-1}})});
  const auto p = twisted_alexander(m, sign).polynomial;
  CHECK(p == P("t^2 + 3*t + 1"));
  CHECK(clay_rolfsen_verdict(p).status == OrderStatus::ObstructedNotBiorderable);
  CHECK(clay_rolfsen_verdict(classical_alexander(m).polynomial).status == OrderStatus::BiorderableByPerronRolfsen);
}

TEST_CASE("cover and twisted verdicts agree across the battery") {
  std::size_t entries = 0;
  for (const auto& m : standard_monodromies()) {
    for (const auto& e : theorem2_battery(m, small_groups())) {
      CHECK_MESSAGE(e.report.passed(), e.manifold, " ", e.group, " ", e.homomorphism);
      ++entries;
    }
  }
  CHECK(entries > 50);
}
