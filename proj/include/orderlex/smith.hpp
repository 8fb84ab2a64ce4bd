#pragma once

#include <cstddef>
#include <vector>

#include "orderlex/laurent.hpp"
#include "orderlex/matrix.hpp"

namespace orderlex {

/// Diagonal of the Smith normal form over Q[t, t^-1]: min(rows, cols)
/// canonical entries p1 | p2 | ..., nonzero entries first, then zeros.
std::vector<LaurentPolynomial> smith_normal_form(PolynomialMatrix m);

/// Smith form of m where every column operation m <- m*E is mirrored on
/// `companion` as companion <- E^-1 * companion (companion.rows() == m.cols()).
/// Used to carry a second map through the change of basis of a shared module.
struct SmithReduction {
  std::vector<LaurentPolynomial> diagonal;
  PolynomialMatrix companion;
};
SmithReduction smith_normal_form_with_companion(PolynomialMatrix m, PolynomialMatrix companion);

/// Finitely generated Q[t, t^-1]-module Q[t,t^-1]^free_rank + sum Q[t,t^-1]/(p_i),
/// with units dropped from the torsion list.
struct ModuleStructure {
  std::vector<LaurentPolynomial> invariant_factors;  // canonical, non-unit, p_i | p_{i+1}
  std::size_t free_rank = 0;

  /// Product of the invariant factors, or 0 when free_rank > 0.
  LaurentPolynomial order() const;
};

/// Module presented by the columns of `relations` (generators = rows).
ModuleStructure cokernel(const PolynomialMatrix& relations);

/// Homology at the middle of C2 --incoming--> C1 --outgoing--> C0 in the
/// column-vector convention (outgoing * incoming == 0 is checked).
ModuleStructure homology(const PolynomialMatrix& incoming, const PolynomialMatrix& outgoing);

}  // namespace orderlex
