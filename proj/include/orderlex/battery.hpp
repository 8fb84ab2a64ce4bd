#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orderlex/finite_group.hpp"
#include "orderlex/mapping_torus.hpp"
#include "orderlex/representation.hpp"
#include "orderlex/verdict.hpp"

namespace orderlex {

struct NamedGroup {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
};

/// Every group of order at most 6 up to isomorphism: 1, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3.
std::vector<NamedGroup> small_groups();
NamedGroup named_group(const std::string& name);

/// a -> aba, b -> ba: abelianization [[2,1],[1,1]].
MappingTorus figure_eight();

/// Certified automorphisms of F2 and F3 used by the battery checks.
std::vector<MappingTorus> standard_monodromies();

/// Representations of dimension <= max_dimension pulled back from Z2, Z3 and
/// S3 through every homomorphism (up to automorphism of the target), plus
/// the trivial representation.
std::vector<FiniteRepresentation> representation_battery(const MappingTorus& m, std::size_t max_dimension = 6);

struct BatteryCount {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_details;
  bool passed() const { return failures == 0 && checks > 0; }
};

/// Rescaling identity for every representation and each d in `scales`.
BatteryCount lemma4_battery(const MappingTorus& m, const std::vector<FiniteRepresentation>& reps,
                            const std::vector<int>& scales = {2, 3});

/// Direct-sum multiplicativity on `pairs` seeded random pairs from `reps`,
/// each summand of dimension at most max_dimension.
BatteryCount lemma5_battery(const MappingTorus& m, const std::vector<FiniteRepresentation>& reps, std::size_t pairs,
                            std::uint64_t seed, std::size_t max_dimension = 6);

struct Theorem2Entry {
  std::string manifold;
  std::string group;
  std::string homomorphism;
  Theorem2Report report;
};

/// Twisted-versus-cover reports for every homomorphism (up to automorphism) to every
/// group in `groups`.
std::vector<Theorem2Entry> theorem2_battery(const MappingTorus& m, const std::vector<NamedGroup>& groups);

/// "[a b | t]" rendering of a homomorphism's images in cycle notation.
std::string describe(const TorusHomomorphism& f);

}  // namespace orderlex
