#include "orderlex/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "orderlex/errors.hpp"

namespace orderlex {

namespace {

constexpr std::string_view kAlphabet = "abcdefghijklmnopqrsuvwxyz";

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeWord FreeWord::reduce(const std::vector<Letter>& letters, int rank) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.generator < 0 || l.generator >= rank)
      throw std::out_of_range("FreeWord: generator index " + std::to_string(l.generator + 1) +
                              " outside rank " + std::to_string(rank));
    push_reduced(out, l);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::power(int exponent) const {
  FreeWord base = exponent < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

int FreeWord::exponent_sum(int g) const {
  int sum = 0;
  for (const auto& l : letters_)
    if (l.generator == g) sum += l.inverse ? -1 : 1;
  return sum;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out = a.letters_;
  out.reserve(a.letters_.size() + b.letters_.size());
  for (const auto& l : b.letters_) push_reduced(out, l);
  return FreeWord(std::move(out));
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a.inverse() * b.inverse() * a * b; }

char generator_symbol(int g) {
  if (g < 0 || g >= kMaxFiberRank) throw std::out_of_range("generator_symbol: index out of range");
  return kAlphabet[static_cast<std::size_t>(g)];
}

FreeWord parse_word(std::string_view text, int rank, bool allow_stable) {
  if (rank < 0 || rank > kMaxFiberRank) throw std::invalid_argument("parse_word: unsupported rank");
  std::vector<Letter> letters;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "1") return {};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("word \"" + std::string(text) + "\": " + why + " at column " + std::to_string(i + 1), 1,
                        i + 1);
    };
    if (!std::isalpha(static_cast<unsigned char>(c))) throw fail(std::string("unexpected character '") + c + "'");
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == 't') {
      if (!allow_stable) throw fail("stable letter 't' is not allowed here");
      letters.push_back({rank, inverse});
      continue;
    }
    const auto pos = kAlphabet.find(lower);
    if (pos == std::string_view::npos || static_cast<int>(pos) >= rank)
      throw fail(std::string("generator '") + lower + "' outside rank " + std::to_string(rank));
    letters.push_back({static_cast<int>(pos), inverse});
  }
  return FreeWord::reduce(letters, allow_stable ? rank + 1 : rank);
}

std::string format_word(const FreeWord& w, int rank, bool with_stable) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    char c;
    if (with_stable && l.generator == rank) {
      c = 't';
    } else {
      if (l.generator >= rank) throw std::out_of_range("format_word: generator outside rank");
      c = generator_symbol(l.generator);
    }
    out += l.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
  }
  return out;
}

FreeEndomorphism::FreeEndomorphism(int rank, std::vector<FreeWord> images,
                                   std::optional<std::vector<FreeWord>> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (rank_ < 1) throw std::invalid_argument("FreeEndomorphism: rank must be positive");
  auto check = [&](const std::vector<FreeWord>& words, const char* what) {
    if (static_cast<int>(words.size()) != rank_)
      throw std::invalid_argument(std::string("FreeEndomorphism: ") + what + " count differs from rank");
    for (const auto& w : words)
      for (const auto& l : w.letters())
        if (l.generator >= rank_) throw std::out_of_range(std::string("FreeEndomorphism: ") + what + " outside rank");
  };
  check(images_, "image");
  if (inverse_images_) check(*inverse_images_, "inverse image");
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  std::vector<FreeWord> gens;
  for (int g = 0; g < rank; ++g) gens.push_back(FreeWord::generator(g));
  return FreeEndomorphism(rank, gens, gens);
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.generator >= rank_) throw std::invalid_argument("FreeEndomorphism::apply: rank mismatch");
    const FreeWord& image = images_[static_cast<std::size_t>(l.generator)];
    out *= l.inverse ? image.inverse() : image;
  }
  return out;
}

FreeEndomorphism FreeEndomorphism::power(int k) const {
  if (k < 0) throw std::invalid_argument("FreeEndomorphism::power: negative exponent");
  FreeEndomorphism out = identity(rank_);
  for (int i = 0; i < k; ++i) out = compose(*this, out);
  return out;
}

FreeEndomorphism FreeEndomorphism::inverse() const {
  if (!inverse_images_) throw CertificationError("endomorphism has no inverse images");
  return FreeEndomorphism(rank_, *inverse_images_, images_);
}

void FreeEndomorphism::certify() const {
  if (!inverse_images_) throw CertificationError("monodromy is not certified: inverse images missing");
  const FreeEndomorphism forward(rank_, images_);
  const FreeEndomorphism backward(rank_, *inverse_images_);
  for (int g = 0; g < rank_; ++g) {
    const FreeWord x = FreeWord::generator(g);
    if (forward.apply(backward.apply(x)) != x || backward.apply(forward.apply(x)) != x)
      throw CertificationError("inverse images do not invert the monodromy at generator '" +
                               std::string(1, generator_symbol(g)) + "'");
  }
}

bool FreeEndomorphism::is_certified() const noexcept {
  try {
    certify();
    return true;
  } catch (const CertificationError&) {
    return false;
  }
}

FreeEndomorphism compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<FreeWord> images;
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  std::optional<std::vector<FreeWord>> inverse_images;
  if (outer.inverse_images() && inner.inverse_images()) {
    // (outer o inner)^-1 = inner^-1 o outer^-1
    const FreeEndomorphism inner_inv(inner.rank(), *inner.inverse_images());
    inverse_images.emplace();
    for (const auto& w : *outer.inverse_images()) inverse_images->push_back(inner_inv.apply(w));
  }
  return FreeEndomorphism(outer.rank(), std::move(images), std::move(inverse_images));
}

RationalMatrix abelianization_matrix(const FreeEndomorphism& e) {
  const auto n = static_cast<std::size_t>(e.rank());
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = e.images()[j].exponent_sum(static_cast<int>(i));
  return m;
}

}  // namespace orderlex
