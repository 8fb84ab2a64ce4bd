#include "orderlex/cover.hpp"

#include <map>
#include <stdexcept>

#include "orderlex/errors.hpp"
#include "orderlex/representation.hpp"

namespace orderlex {

namespace {

// Schreier generator gamma(h, x) = u_h x u_{h f(x)}^-1, keyed by (coset position, generator).
using EdgeKey = std::pair<int, int>;

struct Schreier {
  std::map<int, int> position;        // group element -> coset position
  std::map<EdgeKey, int> basis_index;  // nontrivial edges -> basis index
};

Schreier schreier_tables(const TorusHomomorphism& f, const CoverData& cover) {
  Schreier s;
  for (std::size_t i = 0; i < cover.coset_elements.size(); ++i) s.position[cover.coset_elements[i]] = static_cast<int>(i);
  const FiniteGroup& g = f.target();
  int next = 0;
  for (std::size_t i = 0; i < cover.coset_elements.size(); ++i)
    for (int x = 0; x < f.fiber_rank(); ++x) {
      const int target = g.multiply(cover.coset_elements[i], f.fiber_images()[static_cast<std::size_t>(x)]);
      const FreeWord gamma = cover.transversal[i] * FreeWord::generator(x) *
                             cover.transversal[static_cast<std::size_t>(s.position.at(target))].inverse();
      if (!gamma.empty()) s.basis_index[{static_cast<int>(i), x}] = next++;
    }
  return s;
}

FreeWord rewrite(const TorusHomomorphism& f, const CoverData& cover, const Schreier& s, const FreeWord& word) {
  const FiniteGroup& g = f.target();
  std::vector<Letter> out;
  int coset = 0;
  for (const auto& l : word.letters()) {
    if (l.generator >= f.fiber_rank()) throw std::invalid_argument("rewrite_in_basis: word is not in the fiber");
    const int image = f.fiber_images()[static_cast<std::size_t>(l.generator)];
    if (!l.inverse) {
      auto it = s.basis_index.find({coset, l.generator});
      if (it != s.basis_index.end()) out.push_back({it->second, false});
      coset = s.position.at(g.multiply(cover.coset_elements[static_cast<std::size_t>(coset)], image));
    } else {
      const int from = s.position.at(g.multiply(cover.coset_elements[static_cast<std::size_t>(coset)], g.inverse(image)));
      auto it = s.basis_index.find({from, l.generator});
      if (it != s.basis_index.end()) out.push_back({it->second, true});
      coset = from;
    }
  }
  if (coset != 0) throw std::invalid_argument("rewrite_in_basis: word is not in the covering subgroup");
  return FreeWord::reduce(out, static_cast<int>(cover.subgroup_basis.size()));
}

}  // namespace

FreeWord rewrite_in_basis(const TorusHomomorphism& f, const CoverData& cover, const FreeWord& word) {
  return rewrite(f, cover, schreier_tables(f, cover), word);
}

FreeWord expand_basis_word(const CoverData& cover, const FreeWord& basis_word) {
  FreeWord out;
  for (const auto& l : basis_word.letters()) {
    const FreeWord& y = cover.subgroup_basis.at(static_cast<std::size_t>(l.generator));
    out *= l.inverse ? y.inverse() : y;
  }
  return out;
}

CoverData build_cover(const MappingTorus& m, const TorusHomomorphism& f, const std::optional<CoverDegree>& witness) {
  f.validate(m.monodromy());
  CoverData cover;
  const CoverDegree degree = witness ? *witness : cover_degree(f);
  const FiniteGroup& g = f.target();
  if (degree.d < 1 || g.multiply(g.power(f.stable_image(), degree.d), f.evaluate(degree.w)) != 0)
    throw std::invalid_argument("build_cover: witness does not satisfy f(t^d w) = 1");
  cover.d = degree.d;
  cover.w = degree.w;
  cover.surjective = f.is_surjective();

  const FiberTransversal walk = fiber_transversal(f);
  cover.coset_elements = walk.elements;
  for (int e : walk.elements) cover.transversal.push_back(walk.words.at(e));

  const Schreier s = schreier_tables(f, cover);
  cover.subgroup_basis.resize(s.basis_index.size());
  for (const auto& [key, index] : s.basis_index) {
    const auto [coset, x] = key;
    const int target = g.multiply(cover.coset_elements[static_cast<std::size_t>(coset)],
                                  f.fiber_images()[static_cast<std::size_t>(x)]);
    cover.subgroup_basis[static_cast<std::size_t>(index)] =
        cover.transversal[static_cast<std::size_t>(coset)] * FreeWord::generator(x) *
        cover.transversal[static_cast<std::size_t>(s.position.at(target))].inverse();
  }

  const FreeEndomorphism theta_d = m.monodromy().power(cover.d);
  const FreeEndomorphism theta_inverse_d = m.monodromy().inverse().power(cover.d);
  std::vector<FreeWord> images, inverse_images;
  for (const auto& y : cover.subgroup_basis) {
    images.push_back(rewrite(f, cover, s, theta_d.apply(cover.w * y * cover.w.inverse())));
    inverse_images.push_back(rewrite(f, cover, s, cover.w.inverse() * theta_inverse_d.apply(y) * cover.w));
  }
  const int rank = static_cast<int>(cover.subgroup_basis.size());
  cover.lifted_monodromy = FreeEndomorphism(rank, std::move(images), std::move(inverse_images));
  return cover;
}

AlexanderResult cover_alexander(const CoverData& cover) {
  const RationalMatrix a = abelianization_matrix(cover.lifted_monodromy);
  const PolynomialMatrix relations =
      to_polynomial(RationalMatrix::identity(a.rows()), cover.d) - to_polynomial(a, 0);
  const ModuleStructure module = cokernel(relations);
  AlexanderResult out{module.order(), module.invariant_factors, module.free_rank};
  const LaurentPolynomial direct = canonicalize(substitute_power(char_poly(a), cover.d));
  if (out.polynomial != direct) throw std::logic_error("cover_alexander: module order differs from char poly");
  return out;
}

ShapiroReport verify_shapiro(const MappingTorus& m, const TorusHomomorphism& f) {
  ShapiroReport report;
  report.twisted = twisted_alexander(m, regular_representation(f)).polynomial;
  const CoverData cover = build_cover(m, f);
  report.cover = cover_alexander(cover).polynomial;
  report.equal = report.twisted == report.cover;
  report.d = cover.d;
  report.index = cover.index();
  report.surjective = cover.surjective;
  return report;
}

}  // namespace orderlex
