#include "orderlex/mapping_torus.hpp"

#include <stdexcept>

#include "orderlex/errors.hpp"
#include "orderlex/fox.hpp"

namespace orderlex {

MappingTorus::MappingTorus(FreeEndomorphism monodromy, std::string label)
    : monodromy_(std::move(monodromy)), label_(std::move(label)) {
  if (monodromy_.rank() < 1) throw CertificationError("mapping torus needs a fiber of rank at least 1");
  monodromy_.certify();
}

std::vector<FreeWord> MappingTorus::presentation() const {
  const int n = fiber_rank();
  const FreeWord t = stable_letter();
  std::vector<FreeWord> relators;
  for (int i = 0; i < n; ++i) {
    // Fiber words embed unchanged: generator indices below n are shared.
    const FreeWord image = monodromy_.images()[static_cast<std::size_t>(i)];
    relators.push_back(t * FreeWord::generator(i) * t.inverse() * image.inverse());
  }
  return relators;
}

namespace {

AlexanderResult from_module(const ModuleStructure& module) {
  return {module.order(), module.invariant_factors, module.free_rank};
}

}  // namespace

AlexanderResult classical_alexander(const MappingTorus& m) {
  const RationalMatrix a = abelianization_matrix(m.monodromy());
  const auto n = a.rows();
  PolynomialMatrix relations = to_polynomial(RationalMatrix::identity(n), 1) - to_polynomial(a, 0);
  AlexanderResult out = from_module(cokernel(relations));
  const LaurentPolynomial direct = canonicalize(char_poly(a));
  if (out.polynomial != direct) throw std::logic_error("classical_alexander: module order differs from char poly");
  return out;
}

TwistedComputation twisted_alexander_detailed(const MappingTorus& m, const FiniteRepresentation& rho, int d_scale) {
  if (d_scale < 1) throw std::invalid_argument("twisted_alexander: d_scale must be a positive integer");
  rho.validate(m.monodromy());
  const int n = m.fiber_rank();
  const std::size_t k = rho.dimension();
  const auto gens = static_cast<std::size_t>(n + 1);

  std::vector<int> weights(gens, 0);
  weights.back() = d_scale;
  const Specializer phi(rho.matrices(), weights);

  // Row convention: J (relators x generators) and B (generators x 1) with J*B = 0.
  const auto relators = m.presentation();
  PolynomialMatrix fox(static_cast<std::size_t>(n) * k, gens * k);
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (std::size_t g = 0; g < gens; ++g) {
      const PolynomialMatrix block = phi.specialize(fox_derivative(relators[r], static_cast<int>(g)));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) fox(r * k + i, g * k + j) = block(i, j);
    }
  PolynomialMatrix edges(gens * k, k);
  const PolynomialMatrix identity = to_polynomial(RationalMatrix::identity(k), 0);
  for (std::size_t g = 0; g < gens; ++g) {
    const PolynomialMatrix block = to_polynomial(rho.matrices()[g], static_cast<int>(weights[g])) - identity;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) edges(g * k + i, j) = block(i, j);
  }

  TwistedComputation out;
  const PolynomialMatrix boundary1 = edges.transposed();
  out.result = from_module(homology(fox.transposed(), boundary1));
  out.h0_order = cokernel(boundary1).order();
  out.stable_factor = canonicalize(determinant(to_polynomial(rho.stable(), d_scale) - identity));

  PolynomialMatrix minor(static_cast<std::size_t>(n) * k, static_cast<std::size_t>(n) * k);
  for (std::size_t r = 0; r < minor.rows(); ++r)
    for (std::size_t c = 0; c < minor.cols(); ++c) minor(r, c) = fox(r, c);
  out.deleted_minor = canonicalize(determinant(minor));
  out.cross_check =
      canonicalize(out.result.polynomial * out.stable_factor) == canonicalize(out.deleted_minor * out.h0_order);
  return out;
}

AlexanderResult twisted_alexander(const MappingTorus& m, const FiniteRepresentation& rho, int d_scale) {
  TwistedComputation c = twisted_alexander_detailed(m, rho, d_scale);
  if (!c.cross_check)
    throw std::logic_error("twisted_alexander: homology order and Fox determinant disagree (" +
                           c.result.polynomial.to_string() + " vs " + c.deleted_minor.to_string() + ")");
  return c.result;
}

bool lemma5_check(const MappingTorus& m, const FiniteRepresentation& a, const FiniteRepresentation& b) {
  const auto sum = twisted_alexander(m, direct_sum(a, b)).polynomial;
  const auto product = twisted_alexander(m, a).polynomial * twisted_alexander(m, b).polynomial;
  return canonicalize(sum) == canonicalize(product);
}

bool lemma4_check(const MappingTorus& m, const FiniteRepresentation& rho, int d) {
  const AlexanderResult base = twisted_alexander(m, rho, 1);
  const AlexanderResult scaled = twisted_alexander(m, rho, d);
  if (scaled.polynomial != canonicalize(substitute_power(base.polynomial, d))) return false;
  if (scaled.free_rank != base.free_rank) return false;
  std::vector<LaurentPolynomial> expected;
  for (const auto& p : base.invariant_factors) expected.push_back(canonicalize(substitute_power(p, d)));
  return scaled.invariant_factors == expected;
}

}  // namespace orderlex
