#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderlex/finite_group.hpp"
#include "orderlex/mapping_torus.hpp"
#include "orderlex/representation.hpp"

namespace orderlex {

struct ManifestOptions {
  std::optional<int> depth;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
};

/// A mapping torus with the homomorphisms and representations to study on it.
///
///   {
///     "label": "figure-eight",
///     "rank": 2,
///     "monodromy": ["aba", "ba"],
///     "monodromy_inverse": ["aB", "bbA"],
///     "homomorphisms": [
///       {"label": "z2", "group": ["(1 2)"], "fiber": [0, 0], "stable": 1},
///       {"label": "z3", "group": "Z3", "fiber": ["()", "()"], "stable": "(1 2 3)"}
///     ],
///     "representations": [
///       {"label": "sign-t", "matrices": [[[1]], [[1]], [[-1]]]}
///     ],
///     "options": {"depth": 6, "trials": 500, "seed": 1}
///   }
///
/// "group" is a list of generating permutations or the name of a small group
/// (1, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3). Images are element indices in the
/// enumeration order of the group or permutations in cycle notation.
/// Representation matrices list x1..xn then t; entries are integers or "p/q".
struct Manifest {
  MappingTorus manifold;
  std::vector<TorusHomomorphism> homomorphisms;
  std::vector<FiniteRepresentation> representations;
  ManifestOptions options;
};

/// Throws ParseError (with 1-based line and column) for malformed JSON or
/// fields, and CertificationError when the monodromy, a homomorphism or a
/// representation fails its consistency check.
Manifest parse_manifest(std::string_view text);
Manifest load_manifest(const std::string& path);

}  // namespace orderlex
