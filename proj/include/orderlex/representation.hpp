#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "orderlex/finite_group.hpp"
#include "orderlex/free_group.hpp"
#include "orderlex/matrix.hpp"

namespace orderlex {

/// Representation of the mapping-torus group over Q: one invertible matrix
/// for each of x1..xn and a last one for t.
class FiniteRepresentation {
 public:
  static constexpr int kDefaultOrderBound = 5000;

  FiniteRepresentation() = default;
  /// Throws std::invalid_argument for an empty list, mismatched shapes or a
  /// singular matrix.
  explicit FiniteRepresentation(std::vector<RationalMatrix> matrices, std::string label = {});

  int fiber_rank() const noexcept { return static_cast<int>(matrices_.size()) - 1; }
  std::size_t dimension() const noexcept { return matrices_.empty() ? 0 : matrices_.front().rows(); }
  const std::vector<RationalMatrix>& matrices() const noexcept { return matrices_; }
  const RationalMatrix& stable() const { return matrices_.back(); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Image of a word over x1..xn and t (t encoded as generator n).
  RationalMatrix image(const FreeWord& torus_word) const;

  /// Throws CertificationError unless rho(t) rho(x_i) rho(t)^-1 = rho(theta(x_i))
  /// for every i and every matrix has order at most `order_bound`.
  void validate(const FreeEndomorphism& monodromy, int order_bound = kDefaultOrderBound) const;
  bool is_valid(const FreeEndomorphism& monodromy, int order_bound = kDefaultOrderBound) const;

 private:
  std::vector<RationalMatrix> matrices_;
  std::vector<RationalMatrix> inverses_;
  std::string label_;
};

/// Multiplicative order of a square matrix, or 0 when it exceeds `bound`.
int matrix_order(const RationalMatrix& m, int bound);

/// Linear representation of a finite permutation group, stored per element.
class GroupRepresentation {
 public:
  /// Extends generator matrices along the enumeration words; throws
  /// std::invalid_argument unless the result is a homomorphism.
  static GroupRepresentation from_generators(std::shared_ptr<const FiniteGroup> group,
                                             std::vector<RationalMatrix> generator_matrices, std::string name);
  static GroupRepresentation trivial(std::shared_ptr<const FiniteGroup> group);
  /// Left multiplication on the ordered element list.
  static GroupRepresentation regular(std::shared_ptr<const FiniteGroup> group);
  /// Permutation matrices of the defining action on points 1..degree.
  static GroupRepresentation natural(std::shared_ptr<const FiniteGroup> group);
  /// 1-dimensional sign of the defining permutation action.
  static GroupRepresentation sign(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup& group() const { return *group_; }
  std::size_t dimension() const { return images_.front().rows(); }
  const RationalMatrix& operator()(int element) const { return images_.at(static_cast<std::size_t>(element)); }
  const std::string& name() const noexcept { return name_; }

 private:
  GroupRepresentation() = default;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<RationalMatrix> images_;
  std::string name_;
};

/// rho o f.
FiniteRepresentation pull_back(const TorusHomomorphism& f, const GroupRepresentation& rho);

/// Left regular representation of the image subgroup f(pi) on its element
/// list (in target order); equals the regular representation of G when f is onto.
FiniteRepresentation regular_representation(const TorusHomomorphism& f);

/// The trivial 1-dimensional representation.
FiniteRepresentation trivial_representation(int fiber_rank);

/// Block-diagonal sum; throws std::invalid_argument for different fiber ranks.
FiniteRepresentation direct_sum(const FiniteRepresentation& a, const FiniteRepresentation& b);

/// Block-diagonal sum of two matrices.
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace orderlex
