#pragma once

#include <cstdint>
#include <string>

#include "orderlex/cover.hpp"
#include "orderlex/laurent.hpp"
#include "orderlex/magnus.hpp"
#include "orderlex/matrix.hpp"

namespace orderlex {

enum class OrderStatus { ObstructedNotBiorderable, BiorderableByPerronRolfsen, Inconclusive };
std::string to_string(OrderStatus s);

struct OrderVerdict {
  OrderStatus status = OrderStatus::Inconclusive;
  int positive_root_count = 0;
  LaurentPolynomial witness;  // canonical polynomial the verdict was read from
};

/// No positive real root: obstructed. All roots real and positive:
/// bi-orderable. Otherwise inconclusive. Throws std::domain_error for 0.
OrderVerdict clay_rolfsen_verdict(const LaurentPolynomial& p);

/// Whether char_poly(m) has a root in (0, inf). Throws std::invalid_argument
/// for a non-square matrix.
bool has_positive_real_eigenvalue(const RationalMatrix& m);

/// Random integer upper-triangular matrices with positive diagonal, sizes 2..5;
/// a violation is a matrix without a positive real eigenvalue.
SuiteReport triangular_eigenvalue_suite(std::size_t trials, std::uint64_t seed);

/// Twisted polynomial of the regular representation of f against the
/// classical polynomial of the corresponding cover.
struct Theorem2Report {
  int d = 1;
  int index = 1;
  bool surjective = true;
  LaurentPolynomial classical;         // Delta of M
  LaurentPolynomial twisted;           // regular representation of f, Fox route
  LaurentPolynomial cover_classical;   // char poly of the lifted monodromy, in its own variable
  OrderVerdict classical_verdict, twisted_verdict, cover_verdict;
  bool existence_agrees = false;       // twisted has a positive root <=> cover_classical has one
  bool substitution_exact = false;     // twisted == cover_classical(t^d) up to unit
  bool root_counts_agree = false;      // distinct positive roots correspond under r -> r^d
  bool never_strengthens = false;      // twisted obstructed implies cover obstructed
  int extra_positive_roots = 0;        // positive roots of twisted that are not roots of Delta
  bool gain() const { return extra_positive_roots > 0; }
  bool passed() const { return existence_agrees && substitution_exact && root_counts_agree && never_strengthens; }
};
Theorem2Report theorem2_report(const MappingTorus& m, const TorusHomomorphism& f);

}  // namespace orderlex
