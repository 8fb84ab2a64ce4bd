#include "orderlex/representation.hpp"

#include <stdexcept>

#include "orderlex/errors.hpp"

namespace orderlex {

FiniteRepresentation::FiniteRepresentation(std::vector<RationalMatrix> matrices, std::string label)
    : matrices_(std::move(matrices)), label_(std::move(label)) {
  if (matrices_.size() < 2) throw std::invalid_argument("FiniteRepresentation: need matrices for x1..xn and t");
  const std::size_t k = matrices_.front().rows();
  if (k == 0) throw std::invalid_argument("FiniteRepresentation: dimension must be positive");
  for (const auto& m : matrices_) {
    if (!m.is_square() || m.rows() != k)
      throw std::invalid_argument("FiniteRepresentation: matrices must share one square shape");
    try {
      inverses_.push_back(inverse(m));
    } catch (const std::domain_error&) {
      throw std::invalid_argument("FiniteRepresentation: singular generator matrix");
    }
  }
}

RationalMatrix FiniteRepresentation::image(const FreeWord& torus_word) const {
  RationalMatrix acc = RationalMatrix::identity(dimension());
  for (const auto& l : torus_word.letters()) {
    if (l.generator < 0 || l.generator > fiber_rank())
      throw std::invalid_argument("FiniteRepresentation::image: generator outside the torus alphabet");
    const auto g = static_cast<std::size_t>(l.generator);
    acc = acc * (l.inverse ? inverses_[g] : matrices_[g]);
  }
  return acc;
}

int matrix_order(const RationalMatrix& m, int bound) {
  if (!m.is_square()) throw std::invalid_argument("matrix_order: matrix is not square");
  const RationalMatrix id = RationalMatrix::identity(m.rows());
  RationalMatrix p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

void FiniteRepresentation::validate(const FreeEndomorphism& monodromy, int order_bound) const {
  const std::string who = "representation" + (label_.empty() ? std::string() : " '" + label_ + "'");
  if (monodromy.rank() != fiber_rank()) throw CertificationError(who + ": matrix count differs from fiber rank + 1");
  const RationalMatrix& s = stable();
  const RationalMatrix& s_inv = inverses_.back();
  for (int i = 0; i < fiber_rank(); ++i) {
    const RationalMatrix lhs = s * matrices_[static_cast<std::size_t>(i)] * s_inv;
    if (lhs != image(monodromy.images()[static_cast<std::size_t>(i)]))
      throw CertificationError(who + " violates the relation for generator '" + std::string(1, generator_symbol(i)) +
                               "'");
  }
  for (std::size_t g = 0; g < matrices_.size(); ++g)
    if (matrix_order(matrices_[g], order_bound) == 0)
      throw CertificationError(who + ": a generator matrix has no finite order up to " + std::to_string(order_bound));
}

bool FiniteRepresentation::is_valid(const FreeEndomorphism& monodromy, int order_bound) const {
  try {
    validate(monodromy, order_bound);
    return true;
  } catch (const CertificationError&) {
    return false;
  }
}

GroupRepresentation GroupRepresentation::from_generators(std::shared_ptr<const FiniteGroup> group,
                                                         std::vector<RationalMatrix> generator_matrices,
                                                         std::string name) {
  if (!group) throw std::invalid_argument("GroupRepresentation: missing group");
  if (generator_matrices.size() != group->generators().size())
    throw std::invalid_argument("GroupRepresentation: one matrix per group generator required");
  const std::size_t k = generator_matrices.empty() ? 1 : generator_matrices.front().rows();
  for (const auto& m : generator_matrices)
    if (!m.is_square() || m.rows() != k) throw std::invalid_argument("GroupRepresentation: shape mismatch");
  GroupRepresentation rho;
  rho.group_ = std::move(group);
  rho.name_ = std::move(name);
  const FiniteGroup& g = *rho.group_;
  for (std::size_t e = 0; e < g.size(); ++e) {
    RationalMatrix m = RationalMatrix::identity(k);
    for (int s : g.word(static_cast<int>(e))) m = m * generator_matrices[static_cast<std::size_t>(s)];
    rho.images_.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (rho.images_[a] * rho.images_[b] !=
          rho.images_[static_cast<std::size_t>(g.multiply(static_cast<int>(a), static_cast<int>(b)))])
        throw std::invalid_argument("GroupRepresentation '" + rho.name_ + "' is not a homomorphism");
  return rho;
}

namespace {

RationalMatrix permutation_matrix(const Permutation& p) {
  RationalMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
  return m;
}

int permutation_sign(const Permutation& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t length = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

GroupRepresentation GroupRepresentation::trivial(std::shared_ptr<const FiniteGroup> group) {
  std::vector<RationalMatrix> gens(group->generators().size(), RationalMatrix::identity(1));
  return from_generators(std::move(group), std::move(gens), "trivial");
}

GroupRepresentation GroupRepresentation::regular(std::shared_ptr<const FiniteGroup> group) {
  const FiniteGroup& g = *group;
  std::vector<RationalMatrix> gens;
  for (const auto& p : g.generators()) {
    const int s = g.index_of(p);
    RationalMatrix m(g.size(), g.size());
    for (std::size_t c = 0; c < g.size(); ++c) m(static_cast<std::size_t>(g.multiply(s, static_cast<int>(c))), c) = 1;
    gens.push_back(std::move(m));
  }
  return from_generators(std::move(group), std::move(gens), "regular");
}

GroupRepresentation GroupRepresentation::natural(std::shared_ptr<const FiniteGroup> group) {
  std::vector<RationalMatrix> gens;
  for (const auto& p : group->generators()) gens.push_back(permutation_matrix(p));
  return from_generators(std::move(group), std::move(gens), "natural");
}

GroupRepresentation GroupRepresentation::sign(std::shared_ptr<const FiniteGroup> group) {
  std::vector<RationalMatrix> gens;
  for (const auto& p : group->generators()) gens.push_back(rational_matrix({{permutation_sign(p)}}));
  return from_generators(std::move(group), std::move(gens), "sign");
}

FiniteRepresentation pull_back(const TorusHomomorphism& f, const GroupRepresentation& rho) {
  if (&f.target() != &rho.group() && f.target().elements() != rho.group().elements())
    throw std::invalid_argument("pull_back: representation is of a different group");
  std::vector<RationalMatrix> mats;
  for (int e : f.fiber_images()) mats.push_back(rho(e));
  mats.push_back(rho(f.stable_image()));
  return FiniteRepresentation(std::move(mats), rho.name() + (f.label().empty() ? "" : " o " + f.label()));
}

FiniteRepresentation regular_representation(const TorusHomomorphism& f) {
  const FiniteGroup& g = f.target();
  const std::vector<int> image = f.image_elements();
  std::vector<int> position(g.size(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) position[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  auto left_multiplication = [&](int x) {
    RationalMatrix m(image.size(), image.size());
    for (std::size_t c = 0; c < image.size(); ++c)
      m(static_cast<std::size_t>(position[static_cast<std::size_t>(g.multiply(x, image[c]))]), c) = 1;
    return m;
  };
  std::vector<RationalMatrix> mats;
  for (int e : f.fiber_images()) mats.push_back(left_multiplication(e));
  mats.push_back(left_multiplication(f.stable_image()));
  return FiniteRepresentation(std::move(mats), "regular" + (f.label().empty() ? "" : " o " + f.label()));
}

FiniteRepresentation trivial_representation(int fiber_rank) {
  if (fiber_rank < 1) throw std::invalid_argument("trivial_representation: fiber rank must be positive");
  return FiniteRepresentation(std::vector<RationalMatrix>(static_cast<std::size_t>(fiber_rank) + 1,
                                                          RationalMatrix::identity(1)),
                              "trivial");
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

FiniteRepresentation direct_sum(const FiniteRepresentation& a, const FiniteRepresentation& b) {
  if (a.fiber_rank() != b.fiber_rank()) throw std::invalid_argument("direct_sum: different generator sets");
  std::vector<RationalMatrix> mats;
  for (std::size_t g = 0; g < a.matrices().size(); ++g) mats.push_back(block_diagonal(a.matrices()[g], b.matrices()[g]));
  return FiniteRepresentation(std::move(mats), a.label() + " + " + b.label());
}

}  // namespace orderlex
