#include "orderlex/magnus.hpp"

#include <stdexcept>

namespace orderlex {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Magnus coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Magnus coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Magnus coefficient overflow");
  return r;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int depth) : rank_(rank), depth_(depth) {
  if (rank < 1) throw std::invalid_argument("MagnusSeries: rank must be positive");
  if (depth < 1) throw std::invalid_argument("MagnusSeries: depth must be at least 1");
  std::size_t total = 0, block = 1;
  for (int k = 0; k <= depth; ++k) {
    offsets_.push_back(total);
    total += block;
    if (total > kMaxTerms) throw std::length_error("MagnusSeries: truncation space too large");
    block *= static_cast<std::size_t>(rank);
  }
  offsets_.push_back(total);
  coeffs_.assign(total, 0);
  coeffs_[0] = 1;
}

std::size_t MagnusSeries::index_of(const std::vector<int>& monomial) const {
  if (static_cast<int>(monomial.size()) > depth_) throw std::out_of_range("MagnusSeries: monomial beyond depth");
  std::size_t code = 0;
  for (int v : monomial) {
    if (v < 0 || v >= rank_) throw std::out_of_range("MagnusSeries: variable outside rank");
    code = code * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(v);
  }
  return offsets_[monomial.size()] + code;
}

std::int64_t MagnusSeries::coefficient(const std::vector<int>& monomial) const { return coeffs_[index_of(monomial)]; }

std::vector<int> MagnusSeries::monomial(std::size_t index) const {
  if (index >= coeffs_.size()) throw std::out_of_range("MagnusSeries: index out of range");
  std::size_t degree = 0;
  while (offsets_[degree + 1] <= index) ++degree;
  std::size_t code = index - offsets_[degree];
  std::vector<int> m(degree);
  for (std::size_t i = degree; i-- > 0;) {
    m[i] = static_cast<int>(code % static_cast<std::size_t>(rank_));
    code /= static_cast<std::size_t>(rank_);
  }
  return m;
}

void MagnusSeries::multiply_generator(int g, bool inverse) {
  if (g < 0 || g >= rank_) throw std::out_of_range("MagnusSeries: generator outside rank");
  const auto n = static_cast<std::size_t>(rank_);
  const auto gi = static_cast<std::size_t>(g);
  if (!inverse) {
    // s'[m X_g] = s[m X_g] + s[m]; descending degrees keep s[m] unmodified.
    for (int k = depth_; k >= 1; --k) {
      const std::size_t count = offsets_[k] - offsets_[k - 1];
      for (std::size_t c = 0; c < count; ++c) {
        auto& target = coeffs_[offsets_[k] + c * n + gi];
        target = checked_add(target, coeffs_[offsets_[k - 1] + c]);
      }
    }
  } else {
    // s' (1 + X_g) = s, so s'[m X_g] = s[m X_g] - s'[m]; ascending degrees.
    for (int k = 1; k <= depth_; ++k) {
      const std::size_t count = offsets_[k] - offsets_[k - 1];
      for (std::size_t c = 0; c < count; ++c) {
        auto& target = coeffs_[offsets_[k] + c * n + gi];
        target = checked_sub(target, coeffs_[offsets_[k - 1] + c]);
      }
    }
  }
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.rank_ != b.rank_ || a.depth_ != b.depth_) throw std::invalid_argument("MagnusSeries: shape mismatch");
  MagnusSeries out(a.rank_, a.depth_);
  out.coeffs_[0] = 0;
  const auto n = static_cast<std::size_t>(a.rank_);
  std::vector<std::size_t> power(static_cast<std::size_t>(a.depth_) + 1, 1);
  for (std::size_t k = 1; k < power.size(); ++k) power[k] = power[k - 1] * n;
  for (int da = 0; da <= a.depth_; ++da)
    for (std::size_t ca = 0; ca < power[static_cast<std::size_t>(da)]; ++ca) {
      const std::int64_t x = a.coeffs_[a.offsets_[da] + ca];
      if (x == 0) continue;
      for (int db = 0; da + db <= a.depth_; ++db)
        for (std::size_t cb = 0; cb < power[static_cast<std::size_t>(db)]; ++cb) {
          const std::int64_t y = b.coeffs_[b.offsets_[db] + cb];
          if (y == 0) continue;
          auto& target = out.coeffs_[out.offsets_[da + db] + ca * power[static_cast<std::size_t>(db)] + cb];
          target = checked_add(target, checked_mul(x, y));
        }
    }
  return out;
}

std::optional<std::size_t> MagnusSeries::leading_index() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

std::string MagnusSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    std::string mono;
    for (int v : monomial(i)) mono += "X" + std::to_string(v + 1);
    const bool first = out.empty();
    const std::int64_t magnitude = c < 0 ? -c : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mono.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

MagnusSeries magnus_expand(const FreeWord& w, int rank, int depth) {
  MagnusSeries s(rank, depth);
  for (const auto& l : w.letters()) s.multiply_generator(l.generator, l.inverse);
  return s;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less:
      return "less";
    case Comparison::Equal:
      return "equal";
    case Comparison::Greater:
      return "greater";
    case Comparison::UnresolvedAtDepth:
      return "unresolved";
  }
  return "unknown";
}

Comparison magnus_compare(const FreeWord& u, const FreeWord& v, int rank, int depth) {
  if (u == v) return Comparison::Equal;
  const MagnusSeries s = magnus_expand(u * v.inverse(), rank, depth);
  const auto lead = s.leading_index();
  if (!lead) return Comparison::UnresolvedAtDepth;
  return s[*lead] > 0 ? Comparison::Greater : Comparison::Less;
}

namespace {

constexpr int kSuiteWordLength = 8;

bool resolved(Comparison c) { return c != Comparison::UnresolvedAtDepth; }

Comparison flipped(Comparison c) {
  if (c == Comparison::Less) return Comparison::Greater;
  if (c == Comparison::Greater) return Comparison::Less;
  return c;
}

SuiteReport make_report(std::string name, std::size_t trials, int depth, std::uint64_t seed) {
  SuiteReport r;
  r.name = std::move(name);
  r.trials = trials;
  r.depth = depth;
  r.seed = seed;
  return r;
}

}  // namespace

SuiteReport bi_order_axiom_suite(std::size_t trials, int depth, std::uint64_t seed) {
  SuiteReport report = make_report("bi-order axioms", trials, depth, seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_rank(2, 3);
  const FreeWord one;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const int n = pick_rank(rng);
    const FreeWord u = random_reduced_word(rng, n, kSuiteWordLength);
    const FreeWord v = random_reduced_word(rng, n, kSuiteWordLength);
    const FreeWord w = random_reduced_word(rng, n, kSuiteWordLength);
    auto cmp = [&](const FreeWord& x, const FreeWord& y) { return magnus_compare(x, y, n, depth); };
    const Comparison uv = cmp(u, v), vu = cmp(v, u), vw = cmp(v, w), uw = cmp(u, w);
    std::size_t bad = 0;

    if (vu != flipped(uv)) ++bad;
    if (resolved(uv) && resolved(vw) && uv == vw && uv != Comparison::Equal && uw != uv) ++bad;
    // Conjugate and right-translated series share the leading term, so the
    // resolution status must agree as well.
    if (cmp(w * u, w * v) != uv) ++bad;
    if (cmp(u * w, v * w) != uv) ++bad;
    const Comparison su = cmp(u, one), sv = cmp(v, one);
    if (su == Comparison::Greater && sv == Comparison::Greater && cmp(u * v, one) != Comparison::Greater) ++bad;
    if (su == Comparison::Less && sv == Comparison::Less && cmp(u * v, one) != Comparison::Less) ++bad;

    if (resolved(uv) && resolved(vw) && resolved(uw)) {
      ++report.resolved;
    } else {
      ++report.unresolved;
    }
    report.violations += bad;
  }
  return report;
}

CommutatorSuiteReport commutator_lemma_suite(int rank, std::size_t trials, int depth, std::uint64_t seed) {
  CommutatorSuiteReport out;
  out.part1 = make_report("commutator part 1", trials, depth, seed);
  out.part2 = make_report("commutator part 2", trials, depth, seed);
  out.part3 = make_report("commutator part 3", trials, depth, seed);
  out.sandwich = make_report("commutator sandwich", trials, depth, seed);
  std::mt19937_64 rng(seed);
  const FreeWord one;
  auto cmp = [&](const FreeWord& x, const FreeWord& y) { return magnus_compare(x, y, rank, depth); };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    FreeWord a = random_reduced_word(rng, rank, kSuiteWordLength);
    FreeWord b = random_reduced_word(rng, rank, kSuiteWordLength);
    const FreeWord c = commutator(a, b);

    // [a,b] < b if b > 1, and [a,b] > b if b < 1.
    {
      const Comparison sb = cmp(b, one), r = cmp(c, b);
      if (!resolved(sb) || !resolved(r)) {
        ++out.part1.unresolved;
      } else {
        ++out.part1.resolved;
        if (r != flipped(sb)) ++out.part1.violations;
      }
    }
    // [a,b] > a^-1 if a > 1, and [a,b] < a^-1 if a < 1.
    {
      const Comparison sa = cmp(a, one), r = cmp(c, a.inverse());
      if (!resolved(sa) || !resolved(r)) {
        ++out.part2.unresolved;
      } else {
        ++out.part2.resolved;
        if (r != sa) ++out.part2.violations;
      }
    }

    const Comparison sc = cmp(c, one);
    if (!resolved(sc)) {
      ++out.part3.unresolved;
      ++out.sandwich.unresolved;
      continue;
    }
    if (sc == Comparison::Equal) {
      ++out.part3.vacuous;
      ++out.sandwich.vacuous;
      ++out.part3.resolved;
      ++out.sandwich.resolved;
      continue;
    }
    // [b,a] = [a,b]^-1, so swapping the pair puts the commutator above 1.
    if (sc == Comparison::Less) std::swap(a, b);
    const FreeWord base = commutator(a, b);

    bool all_resolved = true;
    for (int p = 2; p <= 4; ++p)
      for (int q = 2; q <= 4; ++q) {
        const Comparison r = cmp(commutator(a.power(p), b.power(q)), base);
        if (!resolved(r)) {
          all_resolved = false;
        } else if (r != Comparison::Greater) {
          ++out.part3.violations;
        }
      }
    ++(all_resolved ? out.part3.resolved : out.part3.unresolved);

    all_resolved = true;
    for (int big = 2; big <= 4; ++big) {
      const FreeWord outer = commutator(a.power(big), b.power(big));
      const Comparison below = cmp(outer.inverse(), base), above = cmp(base, outer);
      for (Comparison r : {below, above}) {
        if (!resolved(r)) {
          all_resolved = false;
        } else if (r != Comparison::Less) {
          ++out.sandwich.violations;
        }
      }
    }
    ++(all_resolved ? out.sandwich.resolved : out.sandwich.unresolved);
  }
  return out;
}

SuiteReport convexity_suite(int rank, std::size_t trials, int depth, std::uint64_t seed) {
  SuiteReport report = make_report("commutator subgroup convexity", trials, depth, seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> factors(1, 2);
  auto commutator_product = [&] {
    FreeWord c;
    for (int i = factors(rng); i > 0; --i)
      c *= commutator(random_reduced_word(rng, rank, 4), random_reduced_word(rng, rank, 4));
    return c;
  };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    FreeWord g;
    for (bool abelian_zero = true; abelian_zero;) {
      g = random_reduced_word(rng, rank, kSuiteWordLength);
      abelian_zero = true;
      for (int x = 0; x < rank; ++x) abelian_zero = abelian_zero && g.exponent_sum(x) == 0;
    }
    const FreeWord c = commutator_product(), c2 = commutator_product();
    const Comparison low = magnus_compare(c, g, rank, depth), high = magnus_compare(g, c2, rank, depth);
    if (!resolved(low) || !resolved(high)) {
      ++report.unresolved;
      continue;
    }
    ++report.resolved;
    if (low == Comparison::Less && high == Comparison::Less) ++report.violations;
  }
  return report;
}

}  // namespace orderlex
