#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orderlex/free_group.hpp"

namespace orderlex {

/// Permutation of {0, .., degree-1}; p[i] is the image of i.
using Permutation = std::vector<int>;

/// Parses cycle notation over points 1..degree, e.g. "(1 2)(3 4)"; "()" is
/// the identity. A degree of 0 means "largest point mentioned".
Permutation parse_permutation(std::string_view text, int degree = 0);
std::string format_permutation(const Permutation& p);

/// (p * q)(i) = p(q(i)): q acts first.
Permutation compose(const Permutation& p, const Permutation& q);

/// Permutation group with its elements enumerated breadth-first from the
/// identity, multiplying by generators on the right in generator order.
/// Element 0 is the identity.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultBound = 10000;

  /// Throws std::length_error when the closure exceeds `bound` elements and
  /// std::invalid_argument for generators of mixed degree.
  static FiniteGroup enumerate(std::vector<Permutation> generators, std::size_t bound = kDefaultBound);
  static FiniteGroup cyclic(int order);
  static FiniteGroup symmetric3();

  std::size_t size() const noexcept { return elements_.size(); }
  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  /// Shortlex-minimal word in the (positive) generators reaching element i.
  const std::vector<int>& word(int i) const { return words_.at(static_cast<std::size_t>(i)); }

  /// Index of a permutation, or -1 when it is not in the group.
  int index_of(const Permutation& p) const;
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverses_.at(static_cast<std::size_t>(a)); }
  int power(int a, int k) const;
  int order_of(int a) const;

  /// Elements of the subgroup generated by `gens`, in this group's order.
  std::vector<int> subgroup(const std::vector<int>& gens) const;
  /// Automorphisms as index permutations (auto[i] = image of element i).
  std::vector<std::vector<int>> automorphisms() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
  std::map<Permutation, int> index_;
  std::vector<int> table_;  // size^2, row-major; empty for large groups
  std::vector<int> inverses_;
};

/// Homomorphism from the mapping-torus group <x1..xn, t | t x t^-1 = theta(x)>
/// to a finite group, given by the images of the generators.
class TorusHomomorphism {
 public:
  TorusHomomorphism(std::shared_ptr<const FiniteGroup> target, std::vector<int> fiber_images, int stable_image,
                    std::string label = {});

  const FiniteGroup& target() const { return *target_; }
  std::shared_ptr<const FiniteGroup> target_ptr() const { return target_; }
  int fiber_rank() const noexcept { return static_cast<int>(fiber_images_.size()); }
  const std::vector<int>& fiber_images() const noexcept { return fiber_images_; }
  int stable_image() const noexcept { return stable_image_; }
  const std::string& label() const noexcept { return label_; }

  /// Image of a word over x1..xn and t (t encoded as generator index n).
  int evaluate(const FreeWord& torus_word) const;

  /// Throws CertificationError unless f(t) f(x_i) f(t)^-1 = f(theta(x_i)) for all i.
  void validate(const FreeEndomorphism& monodromy) const;
  bool is_well_defined(const FreeEndomorphism& monodromy) const;

  /// f(pi_1 M) and f(F) as element lists in target order.
  std::vector<int> image_elements() const;
  std::vector<int> fiber_image_elements() const;
  bool is_surjective() const { return image_elements().size() == target_->size(); }

 private:
  std::shared_ptr<const FiniteGroup> target_;
  std::vector<int> fiber_images_;
  int stable_image_;
  std::string label_;
};

/// Breadth-first walk of f(F) over letters x1 < x1^-1 < x2 < ...; the words
/// form a prefix-closed, shortlex-minimal transversal.
struct FiberTransversal {
  std::vector<int> elements;           // BFS order; elements[0] is the identity
  std::map<int, FreeWord> words;       // element -> representative word
};
FiberTransversal fiber_transversal(const TorusHomomorphism& f);

struct CoverDegree {
  int d = 1;
  FreeWord w;  // f(w) = f(t)^-d
};

/// Smallest d >= 1 with f(t)^d in f(F), and the shortlex-minimal w in F with f(w) = f(t)^-d.
CoverDegree cover_degree(const TorusHomomorphism& f);

/// Every well-defined homomorphism to `target` (all |G|^(n+1) assignments tested).
std::vector<TorusHomomorphism> all_homomorphisms(const std::shared_ptr<const FiniteGroup>& target,
                                                 const FreeEndomorphism& monodromy);

/// One representative per orbit of Aut(target) acting on homomorphisms.
std::vector<TorusHomomorphism> homomorphisms_up_to_automorphism(const std::shared_ptr<const FiniteGroup>& target,
                                                                const FreeEndomorphism& monodromy);

}  // namespace orderlex
