#include "orderlex/manifest.hpp"

#include <climits>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "orderlex/battery.hpp"
#include "orderlex/errors.hpp"
#include "orderlex/rational.hpp"

namespace orderlex {

namespace {

using nlohmann::json;

// Input iterator that publishes how far the JSON lexer has read.
struct CountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char** cursor = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    *cursor = ++p;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p != b.p; }
};

bool is_scalar_char(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '+' || c == '-' ||
         c == '.';
}

// Records the byte offset at which every value starts, keyed by JSON pointer.
class Locator : public nlohmann::json_sax<json> {
 public:
  Locator(std::string_view text, const char** cursor) : text_(text), cursor_(cursor) {}

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool string(string_t&) override {
    std::size_t i = consumed() - 1;  // closing quote
    while (i > 0) {
      --i;
      if (text_[i] != '"') continue;
      std::size_t slashes = 0;
      while (i > slashes && text_[i - slashes - 1] == '\\') ++slashes;
      if (slashes % 2 == 0) break;
    }
    record(i);
    advance();
    return true;
  }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    error_offset = position == 0 ? 0 : position - 1;
    error = ex.what();
    if (auto at = error.find("syntax error"); at != std::string::npos) error = error.substr(at);
    return false;
  }

  std::map<std::string, std::size_t> offsets;
  std::size_t error_offset = 0;
  std::string error;

 private:
  struct Frame {
    bool array = false;
    std::string key;
    std::size_t index = 0;
  };

  std::size_t consumed() const { return static_cast<std::size_t>(*cursor_ - text_.data()); }

  std::string path() const {
    std::string out;
    for (const auto& f : stack_) {
      out += '/';
      out += f.array ? std::to_string(f.index) : f.key;
    }
    return out;
  }

  void record(std::size_t offset) { offsets.emplace(path(), offset); }

  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }

  bool scalar() {
    std::size_t i = consumed();
    while (i > 0 && !is_scalar_char(text_[i - 1])) --i;
    while (i > 0 && is_scalar_char(text_[i - 1])) --i;
    record(i);
    advance();
    return true;
  }

  bool open(bool array) {
    record(consumed() - 1);
    stack_.push_back({array, {}, 0});
    return true;
  }

  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }

  std::string_view text_;
  const char** cursor_;
  std::vector<Frame> stack_;
};

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

class Reader {
 public:
  Reader(std::string_view text, std::map<std::string, std::size_t> offsets)
      : text_(text), offsets_(std::move(offsets)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& why, std::size_t extra_columns = 0) const {
    std::string p = path;
    auto it = offsets_.find(p);
    while (it == offsets_.end() && !p.empty()) {
      p.erase(p.rfind('/'));
      it = offsets_.find(p);
    }
    const Position pos = position_of(text_, it == offsets_.end() ? 0 : it->second);
    const std::size_t column = pos.column + extra_columns;
    throw ParseError("line " + std::to_string(pos.line) + ", column " + std::to_string(column) + ": " +
                         (path.empty() ? "manifest" : path) + ": " + why,
                     pos.line, column);
  }

  const json& field(const json& object, const std::string& path, const char* key) const {
    auto it = object.find(key);
    if (it == object.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
  }

  void only_keys(const json& object, const std::string& path, std::initializer_list<const char*> allowed) const {
    for (auto it = object.begin(); it != object.end(); ++it) {
      bool known = false;
      for (const char* k : allowed) known = known || it.key() == k;
      if (!known) fail(path + "/" + it.key(), "unknown field \"" + it.key() + "\"");
    }
  }

  const json& object(const json& v, const std::string& path) const {
    if (!v.is_object()) fail(path, "expected an object");
    return v;
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }

  std::string string(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  long long integer(const json& v, const std::string& path, long long lo, long long hi) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    if (v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(hi))
      fail(path, "value out of range");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) fail(path, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
  }

  std::uint64_t unsigned64(const json& v, const std::string& path) const {
    if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  // Runs `parse` on a string value, rebasing an inner ParseError column.
  template <class F>
  auto text_field(const json& v, const std::string& path, F&& parse) const {
    const std::string s = string(v, path);
    try {
      return parse(s);
    } catch (const ParseError& e) {
      const std::string what = e.what();
      fail(path, what, e.column());
    }
  }

  FreeWord word(const json& v, const std::string& path, int rank) const {
    return text_field(v, path, [&](const std::string& s) { return parse_word(s, rank); });
  }

 private:
  std::string_view text_;
  std::map<std::string, std::size_t> offsets_;
};

std::shared_ptr<const FiniteGroup> read_group(const Reader& r, const json& v, const std::string& path) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    for (auto& g : small_groups())
      if (g.name == name) return g.group;
    r.fail(path, "unknown group \"" + name + "\"");
  }
  r.array(v, path);
  if (v.empty()) r.fail(path, "a group needs at least one generator");
  std::vector<Permutation> gens;
  int degree = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    gens.push_back(r.text_field(v[i], p, [](const std::string& s) { return parse_permutation(s); }));
    degree = std::max(degree, static_cast<int>(gens.back().size()));
  }
  for (auto& g : gens)
    while (static_cast<int>(g.size()) < degree) g.push_back(static_cast<int>(g.size()));
  try {
    return std::make_shared<const FiniteGroup>(FiniteGroup::enumerate(std::move(gens)));
  } catch (const std::length_error& e) {
    r.fail(path, e.what());
  } catch (const std::invalid_argument& e) {
    r.fail(path, e.what());
  }
}

int read_element(const Reader& r, const json& v, const std::string& path, const FiniteGroup& g) {
  if (v.is_string()) {
    const Permutation p =
        r.text_field(v, path, [&](const std::string& s) { return parse_permutation(s, g.degree()); });
    const int index = g.index_of(p);
    if (index < 0) r.fail(path, "permutation is not in the group");
    return index;
  }
  return static_cast<int>(r.integer(v, path, 0, static_cast<long long>(g.size()) - 1));
}

TorusHomomorphism read_homomorphism(const Reader& r, const json& v, const std::string& path, int rank) {
  r.object(v, path);
  r.only_keys(v, path, {"label", "group", "fiber", "stable"});
  const std::string label = v.contains("label") ? r.string(v["label"], path + "/label") : path;
  auto group = read_group(r, r.field(v, path, "group"), path + "/group");
  const json& fiber = r.array(r.field(v, path, "fiber"), path + "/fiber");
  if (static_cast<int>(fiber.size()) != rank)
    r.fail(path + "/fiber", "expected " + std::to_string(rank) + " images, got " + std::to_string(fiber.size()));
  std::vector<int> images;
  for (std::size_t i = 0; i < fiber.size(); ++i)
    images.push_back(read_element(r, fiber[i], path + "/fiber/" + std::to_string(i), *group));
  const int stable = read_element(r, r.field(v, path, "stable"), path + "/stable", *group);
  return TorusHomomorphism(std::move(group), std::move(images), stable, label);
}

Rational read_entry(const Reader& r, const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(static_cast<long>(r.integer(v, path, LONG_MIN, LONG_MAX)));
  if (v.is_string()) return r.text_field(v, path, [](const std::string& s) { return parse_rational(s); });
  r.fail(path, "expected an integer or a \"p/q\" string");
}

FiniteRepresentation read_representation(const Reader& r, const json& v, const std::string& path, int rank) {
  r.object(v, path);
  r.only_keys(v, path, {"label", "matrices"});
  const std::string label = v.contains("label") ? r.string(v["label"], path + "/label") : path;
  const std::string mpath = path + "/matrices";
  const json& ms = r.array(r.field(v, path, "matrices"), mpath);
  if (static_cast<int>(ms.size()) != rank + 1)
    r.fail(mpath, "expected " + std::to_string(rank + 1) + " matrices (x1..xn, t), got " + std::to_string(ms.size()));
  std::vector<RationalMatrix> matrices;
  std::size_t dim = 0;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string kp = mpath + "/" + std::to_string(k);
    const json& rows = r.array(ms[k], kp);
    if (rows.empty()) r.fail(kp, "empty matrix");
    if (k == 0) dim = rows.size();
    if (rows.size() != dim) r.fail(kp, "expected " + std::to_string(dim) + " rows");
    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string ip = kp + "/" + std::to_string(i);
      const json& row = r.array(rows[i], ip);
      if (row.size() != dim) r.fail(ip, "expected " + std::to_string(dim) + " entries");
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = read_entry(r, row[j], ip + "/" + std::to_string(j));
    }
    matrices.push_back(std::move(m));
  }
  return FiniteRepresentation(std::move(matrices), label);
}

ManifestOptions read_options(const Reader& r, const json& v, const std::string& path) {
  r.object(v, path);
  r.only_keys(v, path, {"depth", "trials", "seed"});
  ManifestOptions o;
  if (v.contains("depth")) o.depth = static_cast<int>(r.integer(v["depth"], path + "/depth", 1, 64));
  if (v.contains("trials"))
    o.trials = static_cast<std::size_t>(r.integer(v["trials"], path + "/trials", 1, 100000000));
  if (v.contains("seed")) o.seed = r.unsigned64(v["seed"], path + "/seed");
  return o;
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
  const char* cursor = text.data();
  Locator locator(text, &cursor);
  CountingIterator first{text.data(), &cursor}, last{text.data() + text.size(), &cursor};
  if (!json::sax_parse(first, last, &locator)) {
    const Position pos = position_of(text, locator.error_offset);
    throw ParseError("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
                         locator.error,
                     pos.line, pos.column);
  }
  const json doc = json::parse(text.begin(), text.end());
  const Reader r(text, std::move(locator.offsets));

  r.object(doc, "");
  const json* root = &doc;
  std::string base;
  if (doc.contains("manifold")) {
    r.only_keys(doc, "", {"manifold", "homomorphisms", "representations", "options"});
    root = &r.object(doc["manifold"], "/manifold");
    base = "/manifold";
    r.only_keys(*root, base, {"label", "rank", "monodromy", "monodromy_inverse"});
  } else {
    r.only_keys(doc, "", {"label", "rank", "monodromy", "monodromy_inverse", "homomorphisms", "representations",
                          "options"});
  }

  const int rank = static_cast<int>(r.integer(r.field(*root, base, "rank"), base + "/rank", 1, kMaxFiberRank));
  auto words = [&](const char* key) {
    const std::string p = base + "/" + key;
    const json& list = r.array(r.field(*root, base, key), p);
    if (static_cast<int>(list.size()) != rank)
      r.fail(p, "expected " + std::to_string(rank) + " words, got " + std::to_string(list.size()));
    std::vector<FreeWord> out;
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(r.word(list[i], p + "/" + std::to_string(i), rank));
    return out;
  };
  std::vector<FreeWord> images = words("monodromy");
  std::vector<FreeWord> inverses = words("monodromy_inverse");
  const std::string label = root->contains("label") ? r.string((*root)["label"], base + "/label") : "";

  Manifest m{MappingTorus(FreeEndomorphism(rank, std::move(images), std::move(inverses)), label), {}, {}, {}};

  if (doc.contains("homomorphisms")) {
    const json& homs = r.array(doc["homomorphisms"], "/homomorphisms");
    for (std::size_t i = 0; i < homs.size(); ++i) {
      const std::string p = "/homomorphisms/" + std::to_string(i);
      TorusHomomorphism f = read_homomorphism(r, homs[i], p, rank);
      f.validate(m.manifold.monodromy());
      m.homomorphisms.push_back(std::move(f));
    }
  }
  if (doc.contains("representations")) {
    const json& reps = r.array(doc["representations"], "/representations");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::string p = "/representations/" + std::to_string(i);
      FiniteRepresentation rho = read_representation(r, reps[i], p, rank);
      rho.validate(m.manifold.monodromy());
      m.representations.push_back(std::move(rho));
    }
  }
  if (doc.contains("options")) m.options = read_options(r, doc["options"], "/options");
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open manifest '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

}  // namespace orderlex
