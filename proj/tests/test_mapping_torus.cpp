#include <memory>
#include <random>

#include "doctest.h"
#include "orderlex/errors.hpp"
#include "orderlex/mapping_torus.hpp"
#include "orderlex/roots.hpp"
#include "printing.hpp"

using namespace orderlex;

namespace {

FreeWord W(const char* text, int rank = 2) { return parse_word(text, rank); }
LaurentPolynomial P(const char* text) { return LaurentPolynomial::parse(text); }

MappingTorus figure_eight() {
  return MappingTorus(FreeEndomorphism(2, {W("ab"), W("bab")}, std::vector<FreeWord>{W("aaB"), W("bA")}), "4_1");
}

MappingTorus figure_eight_transposed() {
  return MappingTorus(FreeEndomorphism(2, {W("aba"), W("ba")}, std::vector<FreeWord>{W("aB"), W("bbA")}), "4_1'");
}

MappingTorus trefoil() {
  return MappingTorus(FreeEndomorphism(2, {W("ab"), W("A")}, std::vector<FreeWord>{W("B"), W("ba")}), "3_1");
}

// a -> b, b -> c, c -> ab: abelianization has char poly t^3 - t - 1.
MappingTorus rank3_example() {
  return MappingTorus(FreeEndomorphism(3, {W("b", 3), W("c", 3), W("ab", 3)},
                                       std::vector<FreeWord>{W("cA", 3), W("a", 3), W("b", 3)}),
                      "abc");
}

std::shared_ptr<const FiniteGroup> cyclic(int k) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(k)); }
std::shared_ptr<const FiniteGroup> s3() { return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3()); }

// Conjugate every image by c: x -> c theta(x) c^-1, with inverse x -> theta^-1(c^-1 x c).
MappingTorus conjugated(const MappingTorus& m, const FreeWord& c) {
  const auto& theta = m.monodromy();
  const auto inv = theta.inverse();
  std::vector<FreeWord> images, inverse_images;
  for (int g = 0; g < theta.rank(); ++g) {
    images.push_back(c * theta.images()[static_cast<std::size_t>(g)] * c.inverse());
    inverse_images.push_back(inv.apply(c.inverse() * FreeWord::generator(g) * c));
  }
  return MappingTorus(FreeEndomorphism(theta.rank(), images, inverse_images));
}

}  // namespace

TEST_CASE("certification is required") {
  CHECK_THROWS_AS(MappingTorus(FreeEndomorphism(2, {W("ab"), W("bab")})), CertificationError);
  CHECK_THROWS_AS(MappingTorus(FreeEndomorphism(2, {W("ab"), W("bab")}, std::vector<FreeWord>{W("aB"), W("bA")})),
                  CertificationError);
  CHECK_NOTHROW(figure_eight());
  CHECK_NOTHROW(figure_eight_transposed());
  CHECK_NOTHROW(trefoil());
  CHECK_NOTHROW(rank3_example());
}

TEST_CASE("presentation") {
  MappingTorus torus(FreeEndomorphism::identity(1));
  auto r = torus.presentation();
  REQUIRE(r.size() == 1);
  CHECK(format_word(r[0], 1, true) == "taTA");
  auto fig = figure_eight().presentation();
  REQUIRE(fig.size() == 2);
  CHECK(format_word(fig[0], 2, true) == "taTBA");
  CHECK(format_word(fig[1], 2, true) == "tbTBAB");
}

TEST_CASE("classical Alexander polynomial") {
  CHECK(classical_alexander(figure_eight()).polynomial == P("t^2 - 3*t + 1"));
  CHECK(classical_alexander(figure_eight_transposed()).polynomial == P("t^2 - 3*t + 1"));
  CHECK(classical_alexander(trefoil()).polynomial == P("t^2 - t + 1"));
  CHECK(classical_alexander(MappingTorus(FreeEndomorphism::identity(2))).polynomial == P("(t - 1)^2"));
  CHECK(classical_alexander(MappingTorus(FreeEndomorphism::identity(2))).invariant_factors ==
        std::vector<LaurentPolynomial>{P("t - 1"), P("t - 1")});
  CHECK(classical_alexander(MappingTorus(FreeEndomorphism(1, {W("A", 1)}, std::vector<FreeWord>{W("A", 1)})))
            .polynomial == P("t + 1"));
  CHECK(classical_alexander(rank3_example()).polynomial == P("t^3 - t - 1"));
  for (const auto& m : {figure_eight(), trefoil(), rank3_example()}) {
    const auto delta = classical_alexander(m).polynomial;
    CHECK(delta.high_degree() == m.fiber_rank());
    CHECK(delta.leading_coefficient() == 1);
    const RationalMatrix a = abelianization_matrix(m.monodromy());
    const Rational at_one = delta.evaluate(Rational(1));
    const Rational direct = determinant(RationalMatrix::identity(a.rows()) - a);
    CHECK((at_one == direct || at_one == -direct));
  }
}

TEST_CASE("trivial representation recovers the classical polynomial") {
  for (const auto& m : {figure_eight(), figure_eight_transposed(), trefoil(), rank3_example(),
                        MappingTorus(FreeEndomorphism::identity(2))}) {
    const auto eps = trivial_representation(m.fiber_rank());
    const auto twisted = twisted_alexander_detailed(m, eps);
    const auto classical = classical_alexander(m);
    CHECK(twisted.cross_check);
    CHECK(twisted.result.polynomial == classical.polynomial);
    CHECK(twisted.result.invariant_factors == classical.invariant_factors);
    CHECK(twisted.result.free_rank == 0);
    CHECK(twisted.h0_order == P("t - 1"));
  }
}

TEST_CASE("figure-eight with the regular Z2 representation") {
  for (const auto& m : {figure_eight(), figure_eight_transposed()}) {
    const auto rho = regular_representation(TorusHomomorphism(cyclic(2), {0, 0}, 1));
    const auto result = twisted_alexander(m, rho);
    CHECK(result.polynomial == canonicalize(P("(t^2 + 3*t + 1)*(t^2 - 3*t + 1)")));
    CHECK(result.polynomial == P("t^4 - 7*t^2 + 1"));
    CHECK(sturm_positive_root_count(result.polynomial) == 2);
  }
}

TEST_CASE("twisted computation rejects bad input") {
  const auto m = figure_eight();
  FiniteRepresentation bad({rational_matrix({{-1}}), RationalMatrix::identity(1), RationalMatrix::identity(1)});
  CHECK_THROWS_AS(twisted_alexander(m, bad), CertificationError);
  CHECK_THROWS_AS(twisted_alexander(m, trivial_representation(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(twisted_alexander(m, trivial_representation(3)), CertificationError);
}

TEST_CASE("rescaling") {
  const auto m = figure_eight();
  const auto eps = trivial_representation(2);
  CHECK(twisted_alexander(m, eps, 2).polynomial == P("t^4 - 3*t^2 + 1"));
  for (const auto& mt : {figure_eight(), trefoil(), rank3_example(), MappingTorus(FreeEndomorphism::identity(2))})
    for (int k : {2, 3})
      for (const auto& f : all_homomorphisms(cyclic(k), mt.monodromy())) {
        const auto rho = regular_representation(f);
        CHECK(lemma4_check(mt, rho, 2));
        CHECK(lemma4_check(mt, rho, 3));
      }
}

TEST_CASE("direct sums multiply") {
  const auto m = figure_eight();
  const auto eps = trivial_representation(2);
  const auto z2 = regular_representation(TorusHomomorphism(cyclic(2), {0, 0}, 1));
  CHECK(lemma5_check(m, eps, eps));
  CHECK(lemma5_check(m, eps, z2));
  // The regular Z2 representation splits as trivial + sign.
  FiniteRepresentation sign({RationalMatrix::identity(1), RationalMatrix::identity(1), rational_matrix({{-1}})});
  CHECK(twisted_alexander(m, z2).polynomial ==
        canonicalize(twisted_alexander(m, eps).polynomial * twisted_alexander(m, sign).polynomial));
  CHECK(twisted_alexander(m, sign).polynomial == P("t^2 + 3*t + 1"));

  const auto group = s3();
  const auto sign_s3 = GroupRepresentation::sign(group);
  const auto natural = GroupRepresentation::natural(group);
  const auto identity = MappingTorus(FreeEndomorphism::identity(2));
  int checked = 0;
  for (const auto& f : homomorphisms_up_to_automorphism(group, identity.monodromy())) {
    CHECK(lemma5_check(identity, pull_back(f, sign_s3), pull_back(f, natural)));
    if (++checked == 8) break;
  }
}

TEST_CASE("polynomials are invariant under conjugating the monodromy") {
  std::mt19937_64 rng(17);
  const auto base = figure_eight();
  const std::vector<FreeWord> conjugators{W("a"), W("bA"), W("abAB"), W("bbaB")};
  for (const auto& c : conjugators) {
    const auto m = conjugated(base, c);
    CHECK(classical_alexander(m).polynomial == classical_alexander(base).polynomial);
    for (int k = 2; k <= 4; ++k)
      for (const auto& f : all_homomorphisms(cyclic(k), base.monodromy())) {
        // t' = c t, so f'(t') = f(c) f(t).
        const int stable = f.target().multiply(f.evaluate(c), f.stable_image());
        TorusHomomorphism g(f.target_ptr(), f.fiber_images(), stable);
        REQUIRE(g.is_well_defined(m.monodromy()));
        CHECK(twisted_alexander(m, regular_representation(g)).polynomial ==
              twisted_alexander(base, regular_representation(f)).polynomial);
      }
  }
}

TEST_CASE("invariant factors form a divisibility chain") {
  for (const auto& m : {figure_eight(), trefoil(), rank3_example(), MappingTorus(FreeEndomorphism::identity(2))})
    for (const auto& f : all_homomorphisms(s3(), m.monodromy())) {
      const auto r = twisted_alexander(m, regular_representation(f));
      for (std::size_t i = 1; i < r.invariant_factors.size(); ++i)
        CHECK(divides(r.invariant_factors[i - 1], r.invariant_factors[i]));
      LaurentPolynomial product(1);
      for (const auto& p : r.invariant_factors) product = product * p;
      CHECK(r.polynomial == (r.free_rank ? LaurentPolynomial() : canonicalize(product)));
    }
}
