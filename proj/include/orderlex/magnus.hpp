#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orderlex/free_group.hpp"

namespace orderlex {

/// Truncated Magnus series in non-commuting X1..Xn, exact to total degree
/// `depth`. Coefficients are 64-bit integers; arithmetic that would overflow
/// throws std::overflow_error. Monomials are indexed in graded-lex order
/// (degree first, then lexicographic with X1 < X2 < ...).
class MagnusSeries {
 public:
  static constexpr std::size_t kMaxTerms = std::size_t{1} << 22;

  /// The series 1. Throws std::invalid_argument for rank < 1 or depth < 1 and
  /// std::length_error when the truncated space exceeds kMaxTerms.
  MagnusSeries(int rank, int depth);

  int rank() const noexcept { return rank_; }
  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t index) const { return coeffs_.at(index); }
  /// Coefficient of X_{m[0]} X_{m[1]} ... (0-based variables).
  std::int64_t coefficient(const std::vector<int>& monomial) const;
  std::vector<int> monomial(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& monomial) const;

  /// Right multiplication by (1 + X_g) or its inverse.
  void multiply_generator(int g, bool inverse);
  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

  /// Graded-lex index of the first nonzero coefficient of positive degree.
  std::optional<std::size_t> leading_index() const;
  std::string to_string() const;

 private:
  int rank_;
  int depth_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = first index of degree k; offsets_[depth+1] = size
  std::vector<std::int64_t> coeffs_;
};

/// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
MagnusSeries magnus_expand(const FreeWord& w, int rank, int depth);

enum class Comparison { Less, Equal, Greater, UnresolvedAtDepth };
std::string to_string(Comparison c);

/// Compares u and v by the sign of the leading coefficient of expand(u v^-1).
/// Equal only for equal reduced words; UnresolvedAtDepth when u != v but the
/// series agree through `depth`.
Comparison magnus_compare(const FreeWord& u, const FreeWord& v, int rank, int depth);

/// Counts for a seeded property suite.
struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t resolved = 0;
  std::size_t unresolved = 0;
  std::size_t vacuous = 0;  // resolved, but the hypothesis did not apply
  std::size_t violations = 0;
  int depth = 0;
  std::uint64_t seed = 0;

  bool passed() const { return violations == 0; }
};

/// Random reduced word of uniform length 1..max_length over `rank` generators.
template <class Rng>
FreeWord random_reduced_word(Rng& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> length(1, max_length), generator(0, rank - 1), sign(0, 1);
  std::vector<Letter> letters;
  const int target = length(rng);
  while (static_cast<int>(letters.size()) < target) {
    const Letter l{generator(rng), sign(rng) == 1};
    if (!letters.empty() && letters.back() == l.inverted()) continue;
    letters.push_back(l);
  }
  return FreeWord::reduce(letters, rank);
}

/// Antisymmetry, transitivity, left and right invariance and positive-cone
/// closure on `trials` random triples of words (length <= 8, rank 2 or 3).
SuiteReport bi_order_axiom_suite(std::size_t trials, int depth, std::uint64_t seed);

/// The commutator inequalities, each part on `trials` random pairs of words
/// of length <= 8: part 1 ([a,b] vs b), part 2 ([a,b] vs a^-1), part 3
/// ([a^n,b^m] vs [a,b], 2 <= n,m <= 4) and the sandwich
/// [a^N,b^N]^-1 < [a,b] < [a^N,b^N] for 2 <= N <= 4.
struct CommutatorSuiteReport {
  SuiteReport part1, part2, part3, sandwich;
  bool passed() const { return part1.passed() && part2.passed() && part3.passed() && sandwich.passed(); }
};
CommutatorSuiteReport commutator_lemma_suite(int rank, std::size_t trials, int depth, std::uint64_t seed);

/// Samples g outside [F,F] and products of commutators c, c'; a violation is
/// a resolved c < g < c'.
SuiteReport convexity_suite(int rank, std::size_t trials, int depth, std::uint64_t seed);

}  // namespace orderlex
