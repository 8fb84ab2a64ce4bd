// orderlex: command-line front end over the C API.
//
// Exit codes: 0 success, 1 a check failed, 2 parse error, 3 certification
// failure, 4 unresolved selector, 5 invalid arguments, 6 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "orderlex/orderlex.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string manifest;
  int depth = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int d_scale = 1;
  std::string hom;
  std::string rep;
  std::string check;
  bool json = false;
};

struct ManifestDeleter {
  void operator()(olx_manifest* m) const { olx_manifest_free(m); }
};
using ManifestPtr = std::unique_ptr<olx_manifest, ManifestDeleter>;

int fail(olx_status status) {
  std::cerr << "orderlex: " << olx_status_name(status) << ": " << olx_last_error() << "\n";
  return status;
}

olx_status load(const std::string& path, ManifestPtr& out) {
  olx_manifest* raw = nullptr;
  olx_status status;
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    status = olx_manifest_load_string(text.data(), text.size(), &raw);
  } else {
    status = olx_manifest_load_file(path.c_str(), &raw);
  }
  out.reset(raw);
  return status;
}

const char* optional(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

void print_polynomial(const Json& doc) {
  std::cout << doc["polynomial"].get<std::string>() << "\n";
  if (!doc["verdict"].is_null())
    std::cout << "verdict: " << doc["verdict"]["status"].get<std::string>() << "\n"
              << "positive roots: " << doc["verdict"]["positive_root_count"].get<int>() << "\n";
  std::cout << "invariant factors:";
  for (const auto& f : doc["invariant_factors"]) std::cout << " [" << f.get<std::string>() << "]";
  std::cout << "\nfree rank: " << doc["free_rank"].get<std::size_t>() << "\n";
}

void print_cover(const Json& doc) {
  std::cout << "homomorphism: " << doc["homomorphism"].get<std::string>() << "\n"
            << "d: " << doc["d"].get<int>() << "\n"
            << "index: " << doc["index"].get<int>() << (doc["surjective"].get<bool>() ? "" : " (image subgroup)")
            << "\n"
            << "twisted: " << doc["twisted"].get<std::string>() << "\n"
            << "cover: " << doc["cover"].get<std::string>() << "\n"
            << "equal: " << (doc["equal"].get<bool>() ? "true" : "false") << "\n";
}

int run(const std::string& command, const Options& o, bool seed_given) {
  ManifestPtr manifest;
  if (olx_status s = load(o.manifest, manifest); s != OLX_OK) return fail(s);

  olx_settings settings;
  olx_settings_init(&settings);
  settings.depth = o.depth;
  settings.trials = o.trials;
  settings.has_seed = seed_given ? 1 : 0;
  settings.seed = o.seed;

  char* out = nullptr;
  olx_status status = OLX_INTERNAL_ERROR;
  bool structured = o.json;
  if (command == "alexander") {
    status = olx_alexander(manifest.get(), &out);
  } else if (command == "twisted") {
    status = olx_twisted(manifest.get(), optional(o.hom), optional(o.rep), o.d_scale, &out);
  } else if (command == "cover") {
    status = olx_cover(manifest.get(), optional(o.hom), &out);
  } else if (command == "verify") {
    status = olx_verify(manifest.get(), o.check.c_str(), optional(o.hom), &settings, &out);
    structured = true;
  } else if (command == "report") {
    status = olx_report(manifest.get(), &settings, &out);
    structured = true;
  }
  if (!out) return fail(status);
  const std::string text = out;
  olx_string_free(out);

  if (structured) {
    std::cout << text << "\n";
  } else {
    const Json doc = Json::parse(text);
    if (command == "cover") {
      print_cover(doc);
    } else {
      print_polynomial(doc);
    }
  }
  if (status != OLX_OK) std::cerr << "orderlex: " << olx_status_name(status) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials and bi-orderability checks for mapping tori of free-group automorphisms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(olx_version()));

  Options o;
  app.add_option("--depth", o.depth, "Magnus truncation depth (default: manifest, then 6)")
      ->envname("ORDERLEX_DEPTH")
      ->check(CLI::Range(1, 64));
  app.add_option("--trials", o.trials, "Trials per property suite, or pairs for lemma5")->check(CLI::PositiveNumber);
  auto* seed = app.add_option("--seed", o.seed, "Seed for the property suites (default: manifest, then 1)");
  app.add_flag("--json", o.json, "Print JSON instead of text");

  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("manifest", o.manifest, "Manifest file, or - for standard input")->required();
    sub->fallthrough();
  };

  auto* alexander = app.add_subcommand("alexander", "Classical Alexander polynomial and orderability verdict");
  add_manifest(alexander);

  auto* twisted = app.add_subcommand("twisted", "Twisted Alexander polynomial");
  add_manifest(twisted);
  auto* hom = twisted->add_option("--hom", o.hom, "Homomorphism (label or index); uses its regular representation");
  auto* rep = twisted->add_option("--rep", o.rep, "Representation (label, index or 'trivial')");
  hom->excludes(rep);
  twisted->add_option("--d-scale", o.d_scale, "Rescale phi by this factor")->check(CLI::Range(1, 1000));

  auto* cover = app.add_subcommand("cover", "Finite cover of a homomorphism and the comparison with the twisted polynomial");
  add_manifest(cover);
  cover->add_option("--hom", o.hom, "Homomorphism (label or index)");

  auto* verify = app.add_subcommand("verify", "Run a verification and print a JSON report");
  verify->add_option("check", o.check, "shapiro | lemma4 | lemma5 | theorem2 | order-lemmas")
      ->required()
      ->check(CLI::IsMember({"shapiro", "lemma4", "lemma5", "theorem2", "order-lemmas"}));
  add_manifest(verify);
  verify->add_option("--hom", o.hom, "Restrict shapiro/theorem2 to one homomorphism");

  auto* report = app.add_subcommand("report", "Full JSON report for a manifest");
  add_manifest(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : OLX_INVALID_ARGUMENT;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, o, seed->count() > 0);
}
