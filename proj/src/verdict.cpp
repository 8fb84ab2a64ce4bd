#include "orderlex/verdict.hpp"

#include <random>
#include <stdexcept>

#include "orderlex/representation.hpp"
#include "orderlex/roots.hpp"

namespace orderlex {

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::ObstructedNotBiorderable:
      return "obstructed_not_biorderable";
    case OrderStatus::BiorderableByPerronRolfsen:
      return "biorderable_by_perron_rolfsen";
    case OrderStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

OrderVerdict clay_rolfsen_verdict(const LaurentPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("clay_rolfsen_verdict: zero polynomial");
  OrderVerdict v;
  v.witness = canonicalize(p);
  v.positive_root_count = sturm_positive_root_count(v.witness);
  if (v.positive_root_count == 0) {
    v.status = OrderStatus::ObstructedNotBiorderable;
  } else if (all_roots_real_positive(v.witness).all_real_positive) {
    v.status = OrderStatus::BiorderableByPerronRolfsen;
  } else {
    v.status = OrderStatus::Inconclusive;
  }
  return v;
}

bool has_positive_real_eigenvalue(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("has_positive_real_eigenvalue: matrix is not square");
  return sturm_positive_root_count(char_poly(m)) > 0;
}

SuiteReport triangular_eigenvalue_suite(std::size_t trials, std::uint64_t seed) {
  SuiteReport report;
  report.name = "triangular positive eigenvalue";
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 5), diagonal(1, 9), entry(-9, 9);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) m(r, c) = r == c ? diagonal(rng) : entry(rng);
    ++report.resolved;
    if (!has_positive_real_eigenvalue(m)) ++report.violations;
  }
  return report;
}

Theorem2Report theorem2_report(const MappingTorus& m, const TorusHomomorphism& f) {
  Theorem2Report r;
  r.classical = classical_alexander(m).polynomial;
  r.twisted = twisted_alexander(m, regular_representation(f)).polynomial;
  const CoverData cover = build_cover(m, f);
  r.d = cover.d;
  r.index = cover.index();
  r.surjective = cover.surjective;
  r.cover_classical = canonicalize(char_poly(abelianization_matrix(cover.lifted_monodromy)));

  r.classical_verdict = clay_rolfsen_verdict(r.classical);
  r.twisted_verdict = clay_rolfsen_verdict(r.twisted);
  r.cover_verdict = clay_rolfsen_verdict(r.cover_classical);

  const int twisted_roots = r.twisted_verdict.positive_root_count;
  const int cover_roots = r.cover_verdict.positive_root_count;
  r.existence_agrees = (twisted_roots > 0) == (cover_roots > 0);
  r.root_counts_agree = twisted_roots == cover_roots;
  r.substitution_exact = r.twisted == canonicalize(substitute_power(r.cover_classical, r.d));
  r.never_strengthens = r.twisted_verdict.status != OrderStatus::ObstructedNotBiorderable ||
                        r.cover_verdict.status == OrderStatus::ObstructedNotBiorderable;

  const LaurentPolynomial reduced = square_free_part(r.twisted);
  const LaurentPolynomial extra = exact_quotient(reduced, gcd(reduced, r.classical));
  r.extra_positive_roots = sturm_positive_root_count(extra);
  return r;
}

}  // namespace orderlex
