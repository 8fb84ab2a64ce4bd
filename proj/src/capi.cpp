#include "orderlex/orderlex.h"

#include <algorithm>
#include <cstring>
#include <string>

#include <json.hpp>

#include "orderlex/battery.hpp"
#include "orderlex/cover.hpp"
#include "orderlex/errors.hpp"
#include "orderlex/magnus.hpp"
#include "orderlex/manifest.hpp"
#include "orderlex/verdict.hpp"

using orderlex::Manifest;
using Json = nlohmann::ordered_json;

struct olx_manifest {
  explicit olx_manifest(Manifest m) : data(std::move(m)) {}
  Manifest data;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

void set_error(const std::string& message, std::size_t line = 0, std::size_t column = 0) {
  last_error = {message, line, column};
}

template <class F>
olx_status guard(F&& body) {
  last_error = {};
  try {
    return body();
  } catch (const orderlex::ParseError& e) {
    set_error(e.what(), e.line(), e.column());
    return OLX_PARSE_ERROR;
  } catch (const orderlex::CertificationError& e) {
    set_error(e.what());
    return OLX_CERTIFICATION_ERROR;
  } catch (const orderlex::SelectorError& e) {
    set_error(e.what());
    return OLX_SELECTOR_ERROR;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return OLX_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return OLX_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(std::string("internal error: ") + e.what());
    return OLX_INTERNAL_ERROR;
  } catch (...) {
    set_error("internal error");
    return OLX_INTERNAL_ERROR;
  }
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

olx_status emit(const Json& doc, char** out_json, olx_status status = OLX_OK) {
  *out_json = duplicate(doc.dump(2));
  return status;
}

bool require(const void* p, const char* what) {
  if (p) return true;
  set_error(std::string(what) + " is NULL");
  return false;
}

std::string poly(const orderlex::LaurentPolynomial& p) { return orderlex::canonicalize(p).to_string(); }

Json verdict_json(const orderlex::LaurentPolynomial& p) {
  if (p.is_zero()) return nullptr;
  const auto v = orderlex::clay_rolfsen_verdict(p);
  return Json{{"status", orderlex::to_string(v.status)}, {"positive_root_count", v.positive_root_count}};
}

Json verdict_json(const orderlex::OrderVerdict& v) {
  return Json{{"status", orderlex::to_string(v.status)}, {"positive_root_count", v.positive_root_count}};
}

Json alexander_json(const orderlex::AlexanderResult& r) {
  Json factors = Json::array();
  for (const auto& f : r.invariant_factors) factors.push_back(poly(f));
  return Json{{"polynomial", poly(r.polynomial)},
              {"invariant_factors", factors},
              {"free_rank", r.free_rank},
              {"verdict", verdict_json(r.polynomial)}};
}

Json suite_json(const orderlex::SuiteReport& s) {
  return Json{{"trials", s.trials},         {"resolved", s.resolved}, {"unresolved", s.unresolved},
              {"violations", s.violations}, {"depth", s.depth},       {"vacuous", s.vacuous},
              {"seed", s.seed}};
}

Json battery_json(const orderlex::BatteryCount& c) {
  return Json{{"checks", c.checks}, {"failures", c.failures}, {"failure_details", c.failure_details}};
}

bool is_index(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const orderlex::TorusHomomorphism& select_hom(const Manifest& m, const std::string& selector) {
  for (const auto& f : m.homomorphisms)
    if (f.label() == selector) return f;
  if (is_index(selector)) {
    const auto i = std::stoul(selector);
    if (i < m.homomorphisms.size()) return m.homomorphisms[i];
  }
  throw orderlex::SelectorError("no homomorphism matches '" + selector + "' (" +
                                std::to_string(m.homomorphisms.size()) + " in the manifest)");
}

orderlex::FiniteRepresentation select_rep(const Manifest& m, const std::string& selector) {
  for (const auto& r : m.representations)
    if (r.label() == selector) return r;
  if (is_index(selector)) {
    const auto i = std::stoul(selector);
    if (i < m.representations.size()) return m.representations[i];
  }
  if (selector == "trivial") {
    auto r = orderlex::trivial_representation(m.manifold.fiber_rank());
    r.set_label("trivial");
    return r;
  }
  throw orderlex::SelectorError("no representation matches '" + selector + "' (" +
                                std::to_string(m.representations.size()) + " in the manifest, plus 'trivial')");
}

struct LabelledHom {
  std::string label;
  orderlex::TorusHomomorphism f;
};

std::vector<LabelledHom> homs_for(const Manifest& m, const char* hom) {
  std::vector<LabelledHom> out;
  if (hom) {
    const auto& f = select_hom(m, hom);
    out.push_back({f.label(), f});
  } else if (!m.homomorphisms.empty()) {
    for (const auto& f : m.homomorphisms) out.push_back({f.label(), f});
  } else {
    for (const auto& g : orderlex::small_groups())
      for (auto& f : orderlex::homomorphisms_up_to_automorphism(g.group, m.manifold.monodromy()))
        out.push_back({g.name + " " + orderlex::describe(f), std::move(f)});
  }
  return out;
}

std::vector<orderlex::FiniteRepresentation> reps_for(const Manifest& m) {
  auto reps = orderlex::representation_battery(m.manifold);
  for (const auto& r : m.representations) reps.push_back(r);
  for (const auto& f : m.homomorphisms) {
    auto r = orderlex::regular_representation(f);
    r.set_label(f.label() + " regular");
    reps.push_back(std::move(r));
  }
  return reps;
}

int resolve_depth(const Manifest& m, const olx_settings* s) {
  if (s && s->depth > 0) return s->depth;
  return m.options.depth.value_or(6);
}

std::size_t resolve_trials(const Manifest& m, const olx_settings* s, std::size_t fallback) {
  if (s && s->trials > 0) return static_cast<std::size_t>(s->trials);
  return m.options.trials.value_or(fallback);
}

std::uint64_t resolve_seed(const Manifest& m, const olx_settings* s) {
  if (s && s->has_seed) return s->seed;
  return m.options.seed.value_or(1);
}

// y1 y2^-1 ... over the cover basis.
std::string basis_word(const orderlex::FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += '*';
    out += "y" + std::to_string(l.generator + 1);
    if (l.inverse) out += "^-1";
  }
  return out;
}

Json theorem2_json(const std::string& label, const orderlex::Theorem2Report& r) {
  return Json{{"homomorphism", label},
              {"d", r.d},
              {"index", r.index},
              {"surjective", r.surjective},
              {"classical", poly(r.classical)},
              {"twisted", poly(r.twisted)},
              {"cover_classical", poly(r.cover_classical)},
              {"classical_verdict", verdict_json(r.classical_verdict)},
              {"twisted_verdict", verdict_json(r.twisted_verdict)},
              {"cover_verdict", verdict_json(r.cover_verdict)},
              {"existence_agrees", r.existence_agrees},
              {"substitution_exact", r.substitution_exact},
              {"root_counts_agree", r.root_counts_agree},
              {"never_strengthens", r.never_strengthens},
              {"extra_positive_roots", r.extra_positive_roots},
              {"gain", r.gain()},
              {"passed", r.passed()}};
}

Json verify_shapiro(const Manifest& m, const char* hom, std::size_t& failures) {
  Json results = Json::array();
  for (const auto& h : homs_for(m, hom)) {
    const auto r = orderlex::verify_shapiro(m.manifold, h.f);
    if (!r.equal) ++failures;
    results.push_back(Json{{"homomorphism", h.label},
                           {"twisted", poly(r.twisted)},
                           {"cover", poly(r.cover)},
                           {"equal", r.equal},
                           {"d", r.d},
                           {"index", r.index},
                           {"surjective", r.surjective}});
  }
  return Json{{"checks", results.size()}, {"failures", failures}, {"equal", failures == 0}, {"results", results}};
}

Json verify_theorem2(const Manifest& m, const char* hom, std::size_t& failures) {
  Json results = Json::array();
  bool gain = false;
  for (const auto& h : homs_for(m, hom)) {
    const auto r = orderlex::theorem2_report(m.manifold, h.f);
    if (!r.passed()) ++failures;
    gain = gain || r.gain();
    results.push_back(theorem2_json(h.label, r));
  }
  return Json{{"checks", results.size()}, {"failures", failures}, {"gain", gain}, {"results", results}};
}

Json verify_order_lemmas(const Manifest& m, const olx_settings* s, std::size_t& failures) {
  const int depth = resolve_depth(m, s);
  const std::size_t trials = resolve_trials(m, s, 500);
  const std::uint64_t seed = resolve_seed(m, s);
  const int rank = std::clamp(m.manifold.fiber_rank(), 2, 3);
  const auto axioms = orderlex::bi_order_axiom_suite(trials, depth, seed);
  const auto lemma = orderlex::commutator_lemma_suite(rank, trials, depth, seed);
  const auto convex = orderlex::convexity_suite(rank, trials, depth, seed);
  const auto eigen = orderlex::triangular_eigenvalue_suite(trials, seed);
  const orderlex::SuiteReport* all[] = {&axioms, &lemma.part1, &lemma.part2, &lemma.part3,
                                        &lemma.sandwich, &convex, &eigen};
  std::size_t unresolved = 0;
  for (const auto* r : all) {
    failures += r->violations;
    unresolved += r->unresolved;
  }
  return Json{{"seed", seed},
              {"depth", depth},
              {"rank", rank},
              {"trials", trials},
              {"violations", failures},
              {"unresolved", unresolved},
              {"suites",
               Json{{"bi_order_axioms", suite_json(axioms)},
                    {"commutator_part1", suite_json(lemma.part1)},
                    {"commutator_part2", suite_json(lemma.part2)},
                    {"commutator_part3", suite_json(lemma.part3)},
                    {"sandwich", suite_json(lemma.sandwich)},
                    {"convexity", suite_json(convex)},
                    {"triangular_eigenvalues", suite_json(eigen)}}}};
}

}  // namespace

extern "C" {

const char* olx_version(void) { return "1.0.0"; }

const char* olx_status_name(olx_status status) {
  switch (status) {
    case OLX_OK: return "ok";
    case OLX_CHECK_FAILED: return "check_failed";
    case OLX_PARSE_ERROR: return "parse_error";
    case OLX_CERTIFICATION_ERROR: return "certification_error";
    case OLX_SELECTOR_ERROR: return "selector_error";
    case OLX_INVALID_ARGUMENT: return "invalid_argument";
    case OLX_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* olx_last_error(void) { return last_error.message.c_str(); }
size_t olx_last_error_line(void) { return last_error.line; }
size_t olx_last_error_column(void) { return last_error.column; }

void olx_settings_init(olx_settings* settings) {
  if (settings) *settings = olx_settings{0, 0, 0, 0};
}

olx_status olx_manifest_load_file(const char* path, olx_manifest** out) {
  if (!require(out, "out") || !require(path, "path")) return OLX_INVALID_ARGUMENT;
  *out = nullptr;
  return guard([&] {
    *out = new olx_manifest(orderlex::load_manifest(path));
    return OLX_OK;
  });
}

olx_status olx_manifest_load_string(const char* text, size_t length, olx_manifest** out) {
  if (!require(out, "out") || !require(text, "text")) return OLX_INVALID_ARGUMENT;
  *out = nullptr;
  return guard([&] {
    *out = new olx_manifest(orderlex::parse_manifest(std::string_view(text, length)));
    return OLX_OK;
  });
}

void olx_manifest_free(olx_manifest* manifest) { delete manifest; }

const char* olx_manifest_label(const olx_manifest* manifest) {
  return manifest ? manifest->data.manifold.label().c_str() : "";
}

int olx_manifest_rank(const olx_manifest* manifest) { return manifest ? manifest->data.manifold.fiber_rank() : 0; }

size_t olx_manifest_homomorphism_count(const olx_manifest* manifest) {
  return manifest ? manifest->data.homomorphisms.size() : 0;
}

size_t olx_manifest_representation_count(const olx_manifest* manifest) {
  return manifest ? manifest->data.representations.size() : 0;
}

olx_status olx_alexander(const olx_manifest* manifest, char** out_json) {
  if (!require(out_json, "out_json") || !require(manifest, "manifest")) return OLX_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guard([&] {
    const Manifest& m = manifest->data;
    Json doc{{"manifold", m.manifold.label()}, {"rank", m.manifold.fiber_rank()}};
    doc.update(alexander_json(orderlex::classical_alexander(m.manifold)));
    return emit(doc, out_json);
  });
}

olx_status olx_twisted(const olx_manifest* manifest, const char* hom, const char* rep, int d_scale, char** out_json) {
  if (!require(out_json, "out_json") || !require(manifest, "manifest")) return OLX_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guard([&] {
    const Manifest& m = manifest->data;
    if (hom && rep) throw std::invalid_argument("give either a homomorphism or a representation, not both");
    if (!hom && !rep) throw orderlex::SelectorError("twisted needs a homomorphism or a representation selector");
    orderlex::FiniteRepresentation rho;
    std::string source;
    if (hom) {
      const auto& f = select_hom(m, hom);
      rho = orderlex::regular_representation(f);
      rho.set_label(f.label() + " regular");
      source = "homomorphism";
    } else {
      rho = select_rep(m, rep);
      source = "representation";
    }
    Json doc{{"manifold", m.manifold.label()},
             {"source", source},
             {"representation", rho.label()},
             {"dimension", rho.dimension()},
             {"d_scale", d_scale}};
    doc.update(alexander_json(orderlex::twisted_alexander(m.manifold, rho, d_scale)));
    return emit(doc, out_json);
  });
}

olx_status olx_cover(const olx_manifest* manifest, const char* hom, char** out_json) {
  if (!require(out_json, "out_json") || !require(manifest, "manifest")) return OLX_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guard([&] {
    const Manifest& m = manifest->data;
    std::string selector;
    if (hom) {
      selector = hom;
    } else if (m.homomorphisms.size() == 1) {
      selector = "0";
    } else {
      throw orderlex::SelectorError("cover needs a homomorphism selector (" +
                                    std::to_string(m.homomorphisms.size()) + " in the manifest)");
    }
    const auto& f = select_hom(m, selector);
    const auto cover = orderlex::build_cover(m.manifold, f);
    const auto shapiro = orderlex::verify_shapiro(m.manifold, f);
    Json basis = Json::array(), lifted = Json::array();
    for (const auto& w : cover.subgroup_basis) basis.push_back(orderlex::format_word(w, m.manifold.fiber_rank()));
    for (const auto& w : cover.lifted_monodromy.images()) lifted.push_back(basis_word(w));
    const auto cover_poly = orderlex::cover_alexander(cover);
    Json doc{{"manifold", m.manifold.label()},
             {"homomorphism", f.label()},
             {"twisted", poly(shapiro.twisted)},
             {"cover", poly(shapiro.cover)},
             {"equal", shapiro.equal},
             {"d", cover.d},
             {"w", orderlex::format_word(cover.w, m.manifold.fiber_rank())},
             {"index", cover.index()},
             {"surjective", cover.surjective},
             {"basis", basis},
             {"lifted_monodromy", lifted},
             {"cover_invariant_factors", alexander_json(cover_poly)["invariant_factors"]}};
    return emit(doc, out_json, shapiro.equal ? OLX_OK : OLX_CHECK_FAILED);
  });
}

olx_status olx_verify(const olx_manifest* manifest, const char* which, const char* hom, const olx_settings* settings,
                      char** out_json) {
  if (!require(out_json, "out_json") || !require(manifest, "manifest") || !require(which, "which"))
    return OLX_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guard([&] {
    const Manifest& m = manifest->data;
    const std::string check = which;
    Json doc{{"check", check}, {"manifold", m.manifold.label()}};
    std::size_t failures = 0;
    if (check == "shapiro") {
      doc.update(verify_shapiro(m, hom, failures));
    } else if (check == "theorem2") {
      doc.update(verify_theorem2(m, hom, failures));
    } else if (check == "lemma4") {
      const auto count = orderlex::lemma4_battery(m.manifold, reps_for(m), {2, 3});
      failures = count.failures;
      doc["scales"] = {2, 3};
      doc.update(battery_json(count));
    } else if (check == "lemma5") {
      const std::size_t pairs = resolve_trials(m, settings, 20);
      const std::uint64_t seed = resolve_seed(m, settings);
      const auto count = orderlex::lemma5_battery(m.manifold, reps_for(m), pairs, seed);
      failures = count.failures;
      doc["pairs"] = pairs;
      doc["seed"] = seed;
      doc.update(battery_json(count));
    } else if (check == "order-lemmas") {
      doc.update(verify_order_lemmas(m, settings, failures));
    } else {
      throw std::invalid_argument("unknown check '" + check +
                                  "' (expected shapiro, lemma4, lemma5, theorem2 or order-lemmas)");
    }
    doc["passed"] = failures == 0;
    return emit(doc, out_json, failures == 0 ? OLX_OK : OLX_CHECK_FAILED);
  });
}

olx_status olx_report(const olx_manifest* manifest, const olx_settings* settings, char** out_json) {
  if (!require(out_json, "out_json") || !require(manifest, "manifest")) return OLX_INVALID_ARGUMENT;
  *out_json = nullptr;
  return guard([&] {
    const Manifest& m = manifest->data;
    Json doc{{"manifold", m.manifold.label()},
             {"rank", m.manifold.fiber_rank()},
             {"seed", resolve_seed(m, settings)},
             {"depth", resolve_depth(m, settings)}};
    doc["classical"] = alexander_json(orderlex::classical_alexander(m.manifold));
    Json twisted = Json::array();
    for (const auto& f : m.homomorphisms) {
      auto rho = orderlex::regular_representation(f);
      Json entry{{"representation", f.label() + " regular"}, {"dimension", rho.dimension()}};
      entry.update(alexander_json(orderlex::twisted_alexander(m.manifold, rho)));
      twisted.push_back(entry);
    }
    for (const auto& rho : m.representations) {
      Json entry{{"representation", rho.label()}, {"dimension", rho.dimension()}};
      entry.update(alexander_json(orderlex::twisted_alexander(m.manifold, rho)));
      twisted.push_back(entry);
    }
    doc["twisted"] = twisted;
    std::size_t failures = 0;
    doc["theorem2"] = verify_theorem2(m, nullptr, failures);
    doc["passed"] = failures == 0;
    return emit(doc, out_json, failures == 0 ? OLX_OK : OLX_CHECK_FAILED);
  });
}

void olx_string_free(char* text) { delete[] text; }

}  // extern "C"
