#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderlex/matrix.hpp"

namespace orderlex {

/// One letter x_g^(+-1); generators are 0-based.
struct Letter {
  int generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  /// Shortlex letter order: x1 < x1^-1 < x2 < x2^-1 < ...
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return a.inverse <=> b.inverse;
  }
};

/// Freely reduced word in a free group.
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces `letters`; throws std::out_of_range for generators >= rank.
  static FreeWord reduce(const std::vector<Letter>& letters, int rank);
  static FreeWord generator(int g) { return FreeWord({Letter{g, false}}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord power(int exponent) const;
  /// Exponent sum of generator g.
  int exponent_sum(int g) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& b) { return *this = *this * b; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Commutator [a, b] = a^-1 b^-1 a b.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

/// Letter alphabet for fiber generators: a..z without 't' (25 symbols).
/// Lowercase is the generator, uppercase its inverse.
constexpr int kMaxFiberRank = 25;
char generator_symbol(int g);

/// Parses a word over `rank` fiber generators. With `allow_stable`, 't'/'T'
/// denote the stable letter, encoded as generator index `rank`. "1" and ""
/// are the identity; whitespace is ignored.
FreeWord parse_word(std::string_view text, int rank, bool allow_stable = false);

/// Inverse of parse_word; the identity prints as "1".
std::string format_word(const FreeWord& w, int rank, bool with_stable = false);

/// Endomorphism of the free group of rank n, given by generator images.
/// When inverse images are attached, certify() checks both compositions.
class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  FreeEndomorphism(int rank, std::vector<FreeWord> images,
                   std::optional<std::vector<FreeWord>> inverse_images = std::nullopt);

  static FreeEndomorphism identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const std::optional<std::vector<FreeWord>>& inverse_images() const noexcept { return inverse_images_; }

  FreeWord apply(const FreeWord& w) const;
  /// e^k for k >= 0.
  FreeEndomorphism power(int k) const;
  /// The attached inverse as an endomorphism; throws when absent.
  FreeEndomorphism inverse() const;

  /// Throws CertificationError unless inverse images are present and both
  /// compositions fix every generator.
  void certify() const;
  bool is_certified() const noexcept;

  friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  int rank_ = 0;
  std::vector<FreeWord> images_;
  std::optional<std::vector<FreeWord>> inverse_images_;
};

/// (outer o inner)(x) = outer(inner(x)). Inverse images compose when both
/// sides carry them.
FreeEndomorphism compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner);

/// Integer matrix whose column j holds the exponent sums of the image of generator j.
RationalMatrix abelianization_matrix(const FreeEndomorphism& e);

}  // namespace orderlex
