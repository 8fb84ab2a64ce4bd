#include "orderlex/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "orderlex/errors.hpp"

namespace orderlex {

Permutation parse_permutation(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return ParseError("permutation \"" + std::string(text) + "\": " + why + " at column " + std::to_string(i + 1), 1,
                      i + 1);
  };
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (i >= text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail(std::string("unexpected '") + text[i] + "'");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw fail("point too large");
        ++i;
      }
      if (value < 1) throw fail("points are numbered from 1");
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
    skip();
  }
  int largest = 0;
  for (const auto& c : cycles)
    for (int v : c) largest = std::max(largest, v);
  if (degree == 0) degree = std::max(largest, 1);
  if (largest > degree) throw ParseError("permutation \"" + std::string(text) + "\": point exceeds degree");
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto from = static_cast<std::size_t>(c[k] - 1);
      if (seen[from]) throw ParseError("permutation \"" + std::string(text) + "\": repeated point");
      seen[from] = true;
      p[from] = c[(k + 1) % c.size()] - 1;
    }
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      out += (first ? "" : " ") + std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: permutation degrees differ");
  Permutation r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

FiniteGroup FiniteGroup::enumerate(std::vector<Permutation> generators, std::size_t bound) {
  FiniteGroup g;
  g.degree_ = generators.empty() ? 1 : static_cast<int>(generators.front().size());
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != g.degree_) throw std::invalid_argument("FiniteGroup: generators of mixed degree");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.degree_; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) throw std::invalid_argument("FiniteGroup: not a permutation");
  }
  g.generators_ = std::move(generators);

  Permutation identity(static_cast<std::size_t>(g.degree_));
  std::iota(identity.begin(), identity.end(), 0);
  g.elements_.push_back(identity);
  g.words_.emplace_back();
  g.index_[identity] = 0;
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t s = 0; s < g.generators_.size(); ++s) {
      Permutation child = orderlex::compose(g.elements_[head], g.generators_[s]);
      if (g.index_.count(child)) continue;
      if (g.elements_.size() >= bound)
        throw std::length_error("FiniteGroup: enumeration exceeds " + std::to_string(bound) + " elements");
      g.index_[child] = static_cast<int>(g.elements_.size());
      std::vector<int> w = g.words_[head];
      w.push_back(static_cast<int>(s));
      g.elements_.push_back(std::move(child));
      g.words_.push_back(std::move(w));
    }
  }

  const std::size_t n = g.elements_.size();
  if (n <= 1024) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = g.index_.at(orderlex::compose(g.elements_[a], g.elements_[b]));
  }
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Permutation inv(g.elements_[a].size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[static_cast<std::size_t>(g.elements_[a][i])] = static_cast<int>(i);
    g.inverses_[a] = g.index_.at(inv);
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("FiniteGroup::cyclic: order must be positive");
  Permutation p(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % order;
  return enumerate({p});
}

FiniteGroup FiniteGroup::symmetric3() { return enumerate({parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)}); }

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::multiply(int a, int b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_.at(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b));
  return index_.at(orderlex::compose(element(a), element(b)));
}

int FiniteGroup::power(int a, int k) const {
  int base = k < 0 ? inverse(a) : a;
  int out = 0;
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
  return out;
}

int FiniteGroup::order_of(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

std::vector<int> FiniteGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<bool> member(size(), false);
  std::deque<int> queue{0};
  member[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = multiply(x, s);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (member[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> FiniteGroup::automorphisms() const {
  const std::size_t n = size(), k = generators_.size();
  std::vector<int> gen_index;
  for (const auto& p : generators_) gen_index.push_back(index_of(p));
  std::vector<std::vector<int>> out;
  std::vector<int> images(k, 0);
  for (;;) {
    std::vector<int> map(n);
    for (std::size_t e = 0; e < n; ++e) {
      int v = 0;
      for (int s : words_[e]) v = multiply(v, images[static_cast<std::size_t>(s)]);
      map[e] = v;
    }
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = map[static_cast<std::size_t>(multiply(static_cast<int>(a), static_cast<int>(b)))] ==
             multiply(map[a], map[b]);
    if (ok) out.push_back(std::move(map));
    std::size_t pos = 0;
    while (pos < k && ++images[pos] == static_cast<int>(n)) images[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

TorusHomomorphism::TorusHomomorphism(std::shared_ptr<const FiniteGroup> target, std::vector<int> fiber_images,
                                     int stable_image, std::string label)
    : target_(std::move(target)),
      fiber_images_(std::move(fiber_images)),
      stable_image_(stable_image),
      label_(std::move(label)) {
  if (!target_) throw std::invalid_argument("TorusHomomorphism: missing target group");
  auto in_range = [&](int e) { return e >= 0 && static_cast<std::size_t>(e) < target_->size(); };
  for (int e : fiber_images_)
    if (!in_range(e)) throw std::out_of_range("TorusHomomorphism: fiber image index out of range");
  if (!in_range(stable_image_)) throw std::out_of_range("TorusHomomorphism: stable image index out of range");
}

int TorusHomomorphism::evaluate(const FreeWord& torus_word) const {
  int acc = 0;
  const int n = fiber_rank();
  for (const auto& l : torus_word.letters()) {
    int image;
    if (l.generator == n) {
      image = stable_image_;
    } else if (l.generator >= 0 && l.generator < n) {
      image = fiber_images_[static_cast<std::size_t>(l.generator)];
    } else {
      throw std::invalid_argument("TorusHomomorphism::evaluate: generator outside the torus alphabet");
    }
    acc = target_->multiply(acc, l.inverse ? target_->inverse(image) : image);
  }
  return acc;
}

void TorusHomomorphism::validate(const FreeEndomorphism& monodromy) const {
  if (monodromy.rank() != fiber_rank())
    throw CertificationError("homomorphism" + (label_.empty() ? std::string() : " '" + label_ + "'") +
                             ": fiber image count differs from the fiber rank");
  const FiniteGroup& g = *target_;
  for (int i = 0; i < fiber_rank(); ++i) {
    int lhs = g.multiply(g.multiply(stable_image_, fiber_images_[static_cast<std::size_t>(i)]), g.inverse(stable_image_));
    int rhs = evaluate(monodromy.images()[static_cast<std::size_t>(i)]);
    if (lhs != rhs)
      throw CertificationError("homomorphism" + (label_.empty() ? std::string() : " '" + label_ + "'") +
                               " violates the relation t " + std::string(1, generator_symbol(i)) + " T = theta(" +
                               std::string(1, generator_symbol(i)) + ")");
  }
}

bool TorusHomomorphism::is_well_defined(const FreeEndomorphism& monodromy) const {
  try {
    validate(monodromy);
    return true;
  } catch (const CertificationError&) {
    return false;
  }
}

std::vector<int> TorusHomomorphism::image_elements() const {
  std::vector<int> gens = fiber_images_;
  gens.push_back(stable_image_);
  return target_->subgroup(gens);
}

std::vector<int> TorusHomomorphism::fiber_image_elements() const { return target_->subgroup(fiber_images_); }

FiberTransversal fiber_transversal(const TorusHomomorphism& f) {
  const FiniteGroup& g = f.target();
  FiberTransversal out;
  out.elements.push_back(0);
  out.words.emplace(0, FreeWord());
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const int x = out.elements[head];
    const FreeWord base = out.words.at(x);
    for (int gen = 0; gen < f.fiber_rank(); ++gen)
      for (bool inverse : {false, true}) {
        const int image = f.fiber_images()[static_cast<std::size_t>(gen)];
        const int y = g.multiply(x, inverse ? g.inverse(image) : image);
        if (out.words.count(y)) continue;
        FreeWord letter = FreeWord::generator(gen);
        out.words.emplace(y, base * (inverse ? letter.inverse() : letter));
        out.elements.push_back(y);
      }
  }
  return out;
}

CoverDegree cover_degree(const TorusHomomorphism& f) {
  const FiniteGroup& g = f.target();
  FiberTransversal walk = fiber_transversal(f);
  int power = f.stable_image();
  for (int d = 1; d <= static_cast<int>(g.size()); ++d) {
    if (walk.words.count(power)) return {d, walk.words.at(g.inverse(power))};
    power = g.multiply(power, f.stable_image());
  }
  throw std::logic_error("cover_degree: no power of f(t) lies in f(F)");
}

std::vector<TorusHomomorphism> all_homomorphisms(const std::shared_ptr<const FiniteGroup>& target,
                                                 const FreeEndomorphism& monodromy) {
  const int n = monodromy.rank();
  const auto size = static_cast<int>(target->size());
  std::vector<int> assignment(static_cast<std::size_t>(n + 1), 0);
  std::vector<TorusHomomorphism> out;
  for (;;) {
    TorusHomomorphism f(target, std::vector<int>(assignment.begin(), assignment.end() - 1), assignment.back());
    if (f.is_well_defined(monodromy)) out.push_back(std::move(f));
    std::size_t pos = assignment.size();
    // Odometer with the stable image as the most significant digit.
    while (pos > 0) {
      --pos;
      if (++assignment[pos] < size) break;
      assignment[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<TorusHomomorphism> homomorphisms_up_to_automorphism(const std::shared_ptr<const FiniteGroup>& target,
                                                                const FreeEndomorphism& monodromy) {
  const auto autos = target->automorphisms();
  std::vector<TorusHomomorphism> out;
  std::set<std::vector<int>> seen;
  for (auto& f : all_homomorphisms(target, monodromy)) {
    std::vector<int> key = f.fiber_images();
    key.push_back(f.stable_image());
    std::vector<int> best = key;
    for (const auto& a : autos) {
      std::vector<int> moved(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) moved[i] = a[static_cast<std::size_t>(key[i])];
      best = std::min(best, moved);
    }
    if (seen.insert(best).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace orderlex
