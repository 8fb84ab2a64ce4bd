#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orderlex/free_group.hpp"
#include "orderlex/laurent.hpp"
#include "orderlex/representation.hpp"
#include "orderlex/smith.hpp"

namespace orderlex {

/// Mapping torus of a certified automorphism theta of the free group F_n, with
/// pi_1 = <x1..xn, t | t x_i t^-1 = theta(x_i)> and phi(x_i) = 0, phi(t) = 1.
class MappingTorus {
 public:
  /// Throws CertificationError when the monodromy is not a certified automorphism.
  explicit MappingTorus(FreeEndomorphism monodromy, std::string label = {});

  int fiber_rank() const noexcept { return monodromy_.rank(); }
  const FreeEndomorphism& monodromy() const noexcept { return monodromy_; }
  const std::string& label() const noexcept { return label_; }
  /// The stable letter t as a word over n + 1 generators.
  FreeWord stable_letter() const { return FreeWord::generator(fiber_rank()); }

  /// Relators r_i = t x_i t^-1 theta(x_i)^-1 over x1..xn, t (t = generator n).
  std::vector<FreeWord> presentation() const;

 private:
  FreeEndomorphism monodromy_;
  std::string label_;
};

struct AlexanderResult {
  LaurentPolynomial polynomial;  // canonical; 0 when free_rank > 0
  std::vector<LaurentPolynomial> invariant_factors;
  std::size_t free_rank = 0;
};

/// canonical char_poly of the abelianized monodromy, with invariant factors
/// of the fiber homology as a module over Q[t, t^-1].
AlexanderResult classical_alexander(const MappingTorus& m);

/// Full record of a twisted computation, including the determinant cross-check.
struct TwistedComputation {
  AlexanderResult result;
  LaurentPolynomial h0_order;          // order of H_0
  LaurentPolynomial stable_factor;     // det(rho(t) t^d - I)
  LaurentPolynomial deleted_minor;     // det of the Fox matrix without the t column
  bool cross_check = false;            // result * stable_factor == deleted_minor * h0_order up to unit
};

/// First twisted homology of the presentation 2-complex with coefficients
/// rho (x) t^(d_scale * phi). Throws CertificationError for an invalid rho
/// and std::invalid_argument for d_scale < 1.
TwistedComputation twisted_alexander_detailed(const MappingTorus& m, const FiniteRepresentation& rho, int d_scale = 1);
/// Throws std::logic_error if the determinant cross-check fails.
AlexanderResult twisted_alexander(const MappingTorus& m, const FiniteRepresentation& rho, int d_scale = 1);

/// twisted(a + b) == twisted(a) * twisted(b) after canonicalization.
bool lemma5_check(const MappingTorus& m, const FiniteRepresentation& a, const FiniteRepresentation& b);

/// twisted(rho, d) == substitute_power(twisted(rho, 1), d), for the polynomial
/// and for every invariant factor.
bool lemma4_check(const MappingTorus& m, const FiniteRepresentation& rho, int d);

}  // namespace orderlex
