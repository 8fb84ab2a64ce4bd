#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderlex/finite_group.hpp"
#include "orderlex/mapping_torus.hpp"

namespace orderlex {

/// Finite cover of the fiber: F~ = F n ker f with a Reidemeister-Schreier
/// basis, and the monodromy of the covering mapping torus on F~.
struct CoverData {
  int d = 1;
  FreeWord w;                                // f(w) = f(t)^-d
  std::vector<int> coset_elements;           // f(F) in transversal order
  std::vector<FreeWord> transversal;         // Schreier transversal, prefix closed
  std::vector<FreeWord> subgroup_basis;      // words in F freely generating F~
  FreeEndomorphism lifted_monodromy;         // on F~, in terms of subgroup_basis
  bool surjective = true;                    // whether f itself is onto

  int index() const { return static_cast<int>(transversal.size()); }
};

/// Rewrites a word of F lying in F~ as a word in the subgroup basis.
/// Throws std::invalid_argument when the word is not in F~.
FreeWord rewrite_in_basis(const TorusHomomorphism& f, const CoverData& cover, const FreeWord& word);

/// Substitutes the basis words back into F.
FreeWord expand_basis_word(const CoverData& cover, const FreeWord& basis_word);

/// Builds the cover for f. The lifted monodromy is conjugation by the stable
/// element t^d w, so y -> theta^d(w y w^-1). An explicit witness (d, w) may be
/// supplied in place of the shortlex-minimal one. Throws CertificationError
/// when f is not well defined on the mapping torus.
CoverData build_cover(const MappingTorus& m, const TorusHomomorphism& f,
                      const std::optional<CoverDegree>& witness = std::nullopt);

/// Classical polynomial of the covering mapping torus with t -> t^d:
/// canonical det(t^d I - A~).
AlexanderResult cover_alexander(const CoverData& cover);

struct ShapiroReport {
  LaurentPolynomial twisted;
  LaurentPolynomial cover;
  bool equal = false;
  int d = 1;
  int index = 1;
  bool surjective = true;
};

/// Compares the twisted polynomial of the regular representation of f with
/// the cover polynomial.
ShapiroReport verify_shapiro(const MappingTorus& m, const TorusHomomorphism& f);

}  // namespace orderlex
