// crgeo: exact CR-geometric invariants of real-algebraic hypersurfaces.
//
// Thin shell over the C API in crgeo/crgeo.h: every subcommand assembles the
// inputs, makes one library call, prints the JSON report (or a short text
// digest) and exits with the library status.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "crgeo/crgeo.h"

namespace {

using nlohmann::json;

struct SurfaceDeleter {
  void operator()(crgeo_surface* s) const { crgeo_surface_free(s); }
};
using SurfacePtr = std::unique_ptr<crgeo_surface, SurfaceDeleter>;

struct CommonOpts {
  bool text = false;
};

// Looks up a dotted path ("essential_type.value") inside the results object.
const json* find_path(const json& res, const std::string& key) {
  const json* cur = &res;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (!cur->is_object() || !cur->contains(part)) return nullptr;
    cur = &cur->at(part);
    if (dot == std::string::npos) return cur;
    start = dot + 1;
  }
}

int finish(crgeo_status st, char* report, const CommonOpts& opts,
           const std::vector<std::string>& text_keys) {
  if (!report) {
    std::fprintf(stderr, "crgeo: %s\n", crgeo_last_error());
    return static_cast<int>(st);
  }
  if (!opts.text) {
    std::fputs(report, stdout);
    std::fputc('\n', stdout);
  } else {
    const json rep = json::parse(report);
    std::printf("command: %s\n", rep.at("command").get<std::string>().c_str());
    std::printf("exact: %s\n", rep.at("exact").get<bool>() ? "yes" : "no");
    const json& res = rep.at("results");
    for (const std::string& key : text_keys) {
      const json* v = find_path(res, key);
      if (!v) continue;
      std::printf("%s: %s\n", key.c_str(),
                  v->is_string() ? v->get<std::string>().c_str() : v->dump().c_str());
    }
    if (res.contains("steps")) {
      for (const json& stepj : res.at("steps"))
        std::printf("%-4s %s\n", stepj.at("pass").get<bool>() ? "PASS" : "FAIL",
                    stepj.at("name").get<std::string>().c_str());
    }
  }
  crgeo_string_free(report);
  return static_cast<int>(st);
}

// --rho text or --file path; exactly one required
std::string load_expression(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty()) {
    std::fprintf(stderr, "crgeo: provide a defining function with --rho or --file\n");
    std::exit(2);
  }
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "crgeo: cannot read %s\n", path.c_str());
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SurfacePtr make_surface(const std::string& rho, int n) {
  crgeo_surface* raw = nullptr;
  const crgeo_status st = crgeo_surface_parse(rho.c_str(), n, &raw);
  if (st != CRGEO_OK) {
    std::fprintf(stderr, "crgeo: %s\n", crgeo_last_error());
    std::exit(static_cast<int>(st));
  }
  return SurfacePtr(raw);
}

void add_expression_opts(CLI::App* cmd, std::string& rho, std::string& file, int& n) {
  auto* r = cmd->add_option("--rho", rho, "defining expression, e.g. \"-Im(w) + |z1|^2\"");
  auto* f = cmd->add_option("--file", file, "read the defining expression from a file");
  r->excludes(f);
  cmd->add_option("--n", n, "number of z variables")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact CR invariants of real-algebraic hypersurfaces"};
  app.require_subcommand(1);
  app.fallthrough();  // let --text / --json appear after the subcommand name
  CommonOpts opts;
  app.add_flag("--text", opts.text, "print a short text digest instead of JSON");
  app.add_flag("!--json", opts.text, "print the JSON report (default)");

  // shared option storage
  std::string rho, file, point, R = "10";
  std::string source, target;
  std::vector<std::string> components;
  int n = 1, kmax = 0, degree = 0, grid = 32, count = 20;
  unsigned long seed = 0;

  auto* analyze = app.add_subcommand("analyze", "signature and nondegeneracy order at a point");
  add_expression_opts(analyze, rho, file, n);
  analyze->add_option("--point", point, "comma-separated complex rationals (default: origin)");
  analyze->add_option("--kmax", kmax, "nondegeneracy search cap (default n+3)");

  auto* construct = app.add_subcommand("construct", "build the quartic family surface");
  construct->add_option("--n", n, "number of z variables");
  construct->add_option("--R", R, "family coefficient, rational p/q");
  construct->add_option("--count", count, "sample points to generate");
  construct->add_option("--seed", seed, "sample selection seed");

  auto* certify = app.add_subcommand("certify", "certificates plus sphere-grid oracles");
  certify->add_option("--n", n, "number of z variables");
  certify->add_option("--R", R, "family coefficient, rational p/q");
  certify->add_option("--grid", grid, "circle resolution (multiple of four)");

  auto* esstype = app.add_subcommand("esstype", "essential type of the germ at the origin");
  add_expression_opts(esstype, rho, file, n);
  esstype->add_option("--degree", degree, "jet degree cap (default 8)");

  auto* mult = app.add_subcommand("mult", "multiplicity of a holomorphic map germ");
  mult->add_option("--n", n, "number of z variables")->required();
  mult->add_option("--component", components, "map component (repeat n+1 times)")->required();
  mult->add_option("--degree", degree, "jet degree cap (default 8)");

  auto* mapcheck = app.add_subcommand("mapcheck", "does the map send source into target?");
  mapcheck->add_option("--source", source, "source defining expression")->required();
  mapcheck->add_option("--target", target, "target defining expression")->required();
  mapcheck->add_option("--n", n, "source z-variable count")->required();
  int nt = -1;
  mapcheck->add_option("--nt", nt, "target z-variable count (default: same as --n)");
  mapcheck->add_option("--component", components, "target coordinate as a source polynomial")
      ->required();
  mapcheck->add_option("--degree", degree, "jet degree cap (default 8)");

  auto* qsolve = app.add_subcommand("q-solve", "solve w = Q(z, zbar, wbar) to a degree cap");
  add_expression_opts(qsolve, rho, file, n);
  qsolve->add_option("--degree", degree, "jet degree cap (default 8)");

  auto* transform = app.add_subcommand("transform", "move the surface across (z,w) -> (z/w, 1/w)");
  add_expression_opts(transform, rho, file, n);

  auto* verify = app.add_subcommand("verify-paper",
                                    "end-to-end pipeline for the quartic family");
  verify->add_option("--n", n, "number of z variables");
  verify->add_option("--R", R, "family coefficient, rational p/q");
  verify->add_option("--grid", grid, "oracle circle resolution");
  verify->add_option("--seed", seed, "sample selection seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* report = nullptr;
  crgeo_status st = CRGEO_INTERNAL;
  std::vector<std::string> text_keys;
  if (*analyze) {
    const SurfacePtr s = make_surface(load_expression(rho, file), n);
    const char* pt = point.empty() ? nullptr : point.c_str();
    st = crgeo_analyze(s.get(), pt, kmax, &report);
    text_keys = {"signature", "strictly_pseudoconvex"};
  } else if (*construct) {
    st = crgeo_construct(n, R.c_str(), count, seed, &report);
    text_keys = {"rho", "threshold", "compact"};
  } else if (*certify) {
    st = crgeo_certify(n, R.c_str(), grid, &report);
    text_keys = {"sphere_bound", "levi_bound", "bounds_met"};
  } else if (*esstype) {
    const SurfacePtr s = make_surface(load_expression(rho, file), n);
    st = crgeo_esstype(s.get(), degree, &report);
    text_keys = {"essential_type.value", "essential_type.stabilized", "reality"};
  } else if (*mult) {
    std::vector<const char*> raw;
    for (const std::string& c : components) raw.push_back(c.c_str());
    st = crgeo_mult(n, raw.data(), static_cast<int>(raw.size()), degree, &report);
    text_keys = {"multiplicity.value", "multiplicity.stabilized"};
  } else if (*mapcheck) {
    const SurfacePtr src = make_surface(source, n);
    const SurfacePtr tgt = make_surface(target, nt >= 0 ? nt : n);
    std::vector<const char*> raw;
    for (const std::string& c : components) raw.push_back(c.c_str());
    st = crgeo_mapcheck(src.get(), tgt.get(), raw.data(), static_cast<int>(raw.size()), degree,
                        &report);
    text_keys = {"holds", "exact_polynomial", "multiplier_constant"};
  } else if (*qsolve) {
    const SurfacePtr s = make_surface(load_expression(rho, file), n);
    st = crgeo_qsolve(s.get(), degree, &report);
    text_keys = {"Q", "reality", "normal_coordinates"};
  } else if (*transform) {
    const SurfacePtr s = make_surface(load_expression(rho, file), n);
    st = crgeo_transform(s.get(), &report);
    text_keys = {"rho_hat", "clearing_degree", "real"};
  } else if (*verify) {
    st = crgeo_verify(n, R.c_str(), grid, seed, &report);
    text_keys = {"all_pass"};
  }
  return finish(st, report, opts, text_keys);
}
