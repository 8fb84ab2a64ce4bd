#include "orderlex/battery.hpp"

#include <random>
#include <stdexcept>

namespace orderlex {

namespace {

std::shared_ptr<const FiniteGroup> share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

MappingTorus torus(int rank, std::vector<const char*> images, std::vector<const char*> inverses, std::string label) {
  std::vector<FreeWord> fwd, back;
  for (const char* w : images) fwd.push_back(parse_word(w, rank));
  for (const char* w : inverses) back.push_back(parse_word(w, rank));
  return MappingTorus(FreeEndomorphism(rank, std::move(fwd), std::move(back)), std::move(label));
}

}  // namespace

std::vector<NamedGroup> small_groups() {
  return {
      {"1", share(FiniteGroup::cyclic(1))},
      {"Z2", share(FiniteGroup::cyclic(2))},
      {"Z3", share(FiniteGroup::cyclic(3))},
      {"Z4", share(FiniteGroup::cyclic(4))},
      {"Z2xZ2", share(FiniteGroup::enumerate({parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)}))},
      {"Z5", share(FiniteGroup::cyclic(5))},
      {"Z6", share(FiniteGroup::cyclic(6))},
      {"S3", share(FiniteGroup::symmetric3())},
  };
}

NamedGroup named_group(const std::string& name) {
  for (auto& g : small_groups())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown group '" + name + "'");
}

MappingTorus figure_eight() { return torus(2, {"aba", "ba"}, {"aB", "bbA"}, "figure-eight"); }

std::vector<MappingTorus> standard_monodromies() {
  return {
      figure_eight(),
      torus(2, {"ab", "bab"}, {"aaB", "bA"}, "figure-eight (transposed)"),
      torus(2, {"ab", "A"}, {"B", "ba"}, "trefoil"),
      torus(2, {"b", "ab"}, {"bA", "a"}, "golden"),
      torus(2, {"a", "b"}, {"a", "b"}, "identity F2"),
      torus(2, {"A", "B"}, {"A", "B"}, "inversion F2"),
      torus(2, {"b", "a"}, {"b", "a"}, "swap F2"),
      torus(2, {"ab", "b"}, {"aB", "b"}, "Dehn twist F2"),
      torus(2, {"b", "A"}, {"B", "a"}, "quarter turn F2"),
      torus(3, {"b", "c", "a"}, {"c", "a", "b"}, "rotation F3"),
      torus(3, {"b", "c", "ab"}, {"cA", "a", "b"}, "tribonacci-like F3"),
      torus(3, {"ab", "bc", "c"}, {"acB", "bC", "c"}, "unipotent F3"),
      torus(3, {"A", "c", "bc"}, {"A", "cB", "b"}, "mixed F3"),
  };
}

std::vector<FiniteRepresentation> representation_battery(const MappingTorus& m, std::size_t max_dimension) {
  std::vector<FiniteRepresentation> out{trivial_representation(m.fiber_rank())};
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const NamedGroup g = named_group(name);
    std::vector<GroupRepresentation> reps{GroupRepresentation::sign(g.group), GroupRepresentation::natural(g.group),
                                          GroupRepresentation::regular(g.group)};
    if (g.name == "S3")
      reps.push_back(GroupRepresentation::from_generators(
          g.group, {rational_matrix({{0, 1}, {1, 0}}), rational_matrix({{0, -1}, {1, -1}})}, "standard"));
    for (const auto& f : homomorphisms_up_to_automorphism(g.group, m.monodromy())) {
      for (const auto& rho : reps) {
        if (rho.dimension() > max_dimension) continue;
        FiniteRepresentation r = pull_back(f, rho);
        r.set_label(g.name + " " + rho.name() + " " + describe(f));
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

BatteryCount lemma4_battery(const MappingTorus& m, const std::vector<FiniteRepresentation>& reps,
                            const std::vector<int>& scales) {
  BatteryCount count;
  count.name = "lemma4 " + m.label();
  for (const auto& rho : reps)
    for (int d : scales) {
      ++count.checks;
      if (!lemma4_check(m, rho, d)) {
        ++count.failures;
        count.failure_details.push_back(rho.label() + " d=" + std::to_string(d));
      }
    }
  return count;
}

BatteryCount lemma5_battery(const MappingTorus& m, const std::vector<FiniteRepresentation>& reps, std::size_t pairs,
                            std::uint64_t seed, std::size_t max_dimension) {
  BatteryCount count;
  count.name = "lemma5 " + m.label();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  std::size_t attempts = 0;
  while (count.checks < pairs) {
    if (++attempts > 100 * pairs) throw std::runtime_error("lemma5_battery: no pairs fit the dimension bound");
    const auto& a = reps[pick(rng)];
    const auto& b = reps[pick(rng)];
    if (a.dimension() > max_dimension || b.dimension() > max_dimension) continue;
    ++count.checks;
    if (!lemma5_check(m, a, b)) {
      ++count.failures;
      count.failure_details.push_back(a.label() + " + " + b.label());
    }
  }
  return count;
}

std::string describe(const TorusHomomorphism& f) {
  const FiniteGroup& g = f.target();
  std::string out = "[";
  for (std::size_t i = 0; i < f.fiber_images().size(); ++i)
    out += (i ? " " : "") + format_permutation(g.element(f.fiber_images()[i]));
  return out + " | " + format_permutation(g.element(f.stable_image())) + "]";
}

std::vector<Theorem2Entry> theorem2_battery(const MappingTorus& m, const std::vector<NamedGroup>& groups) {
  std::vector<Theorem2Entry> out;
  for (const auto& g : groups)
    for (const auto& f : homomorphisms_up_to_automorphism(g.group, m.monodromy()))
      out.push_back({m.label(), g.name, describe(f), theorem2_report(m, f)});
  return out;
}

}  // namespace orderlex
