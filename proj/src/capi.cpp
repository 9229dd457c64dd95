#include "crgeo/crgeo.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "parse.hpp"
#include "report.hpp"

#define CRGEO_EXPORT __attribute__((visibility("default")))

struct crgeo_surface {
  crgeo::Hypersurface m;
  std::string text;
};

namespace {

using crgeo::json;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** json_out, const json& report) {
  if (json_out) *json_out = dup_string(report.dump(2));
}

// Runs the body, emits its report and maps exceptions onto the C statuses.
// The body returns {report, status} so soft failures still carry a report.
template <typename F>
crgeo_status guarded(char** json_out, F&& body) {
  if (json_out) *json_out = nullptr;
  try {
    auto [report, status] = body();
    emit(json_out, report);
    return status;
  } catch (const crgeo::Error& e) {
    g_last_error = e.what();
    return static_cast<crgeo_status>(static_cast<int>(e.status));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CRGEO_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CRGEO_INTERNAL;
  }
}

using Outcome = std::pair<json, crgeo_status>;

int default_kmax(int n, int k_max) { return k_max > 0 ? k_max : n + 3; }
int default_degree(int degree_cap) { return degree_cap > 0 ? degree_cap : 8; }

crgeo::Rational parse_R(const char* R_text) {
  if (!R_text) throw crgeo::Error(crgeo::Status::bad_argument, "missing R");
  return crgeo::rational_from_string(R_text);
}

const crgeo_surface& deref(const crgeo_surface* s) {
  if (!s) throw crgeo::Error(crgeo::Status::bad_argument, "null surface handle");
  return *s;
}

std::vector<crgeo::Poly> parse_components(int n, const char* const* components, int count) {
  if (!components || count <= 0)
    throw crgeo::Error(crgeo::Status::bad_argument, "no map components given");
  std::vector<crgeo::Poly> out;
  for (int i = 0; i < count; ++i) {
    if (!components[i]) throw crgeo::Error(crgeo::Status::bad_argument, "null map component");
    out.push_back(crgeo::parse_poly(components[i], n));
  }
  return out;
}

}  // namespace

extern "C" {

CRGEO_EXPORT const char* crgeo_last_error(void) { return g_last_error.c_str(); }

CRGEO_EXPORT crgeo_status crgeo_surface_parse(const char* rho_text, int n, crgeo_surface** out) {
  if (out) *out = nullptr;
  try {
    if (!rho_text) throw crgeo::Error(crgeo::Status::bad_argument, "missing expression");
    if (!out) throw crgeo::Error(crgeo::Status::bad_argument, "null output handle");
    auto s = std::make_unique<crgeo_surface>();
    s->m = crgeo::Hypersurface::from_poly(crgeo::parse_poly(rho_text, n));
    s->text = rho_text;
    *out = s.release();
    return CRGEO_OK;
  } catch (const crgeo::Error& e) {
    g_last_error = e.what();
    return static_cast<crgeo_status>(static_cast<int>(e.status));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CRGEO_INTERNAL;
  }
}

CRGEO_EXPORT crgeo_status crgeo_surface_family(int n, const char* R_text, crgeo_surface** out) {
  if (out) *out = nullptr;
  try {
    if (!out) throw crgeo::Error(crgeo::Status::bad_argument, "null output handle");
    const crgeo::FamilyParams par{n, parse_R(R_text)};
    auto s = std::make_unique<crgeo_surface>();
    s->m = crgeo::Hypersurface::from_poly(crgeo::make_rho(par));
    s->text = s->m.rho.str();
    *out = s.release();
    return CRGEO_OK;
  } catch (const crgeo::Error& e) {
    g_last_error = e.what();
    return static_cast<crgeo_status>(static_cast<int>(e.status));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CRGEO_INTERNAL;
  }
}

CRGEO_EXPORT void crgeo_surface_free(crgeo_surface* s) { delete s; }

CRGEO_EXPORT void crgeo_string_free(char* s) { std::free(s); }

CRGEO_EXPORT crgeo_status crgeo_analyze(const crgeo_surface* s, const char* point_text, int k_max,
                                        char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo_surface& surf = deref(s);
    const int n = surf.m.n;
    const crgeo::Point p =
        point_text ? crgeo::parse_point(point_text, n) : crgeo::Point::origin(n);
    const int k = default_kmax(n, k_max);
    json inputs{{"rho", surf.text},
                {"n", n},
                {"point", crgeo::json_point(p)},
                {"k_max", k}};
    json results = crgeo::report_analyze(surf.m, p, k);
    const bool settled = results.at("nondegeneracy").at("order").get<int>() >= 0;
    return {crgeo::make_report("analyze", inputs, results, true),
            settled ? CRGEO_OK : CRGEO_INCONCLUSIVE};
  });
}

CRGEO_EXPORT crgeo_status crgeo_construct(int n, const char* R_text, int count,
                                          unsigned long seed, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo::FamilyParams par{n, parse_R(R_text)};
    json inputs{{"n", n}, {"R", crgeo::json_rational(par.R)}, {"count", count}, {"seed", seed}};
    return {crgeo::make_report("construct", inputs, crgeo::report_construct(par, count, seed),
                               true),
            CRGEO_OK};
  });
}

CRGEO_EXPORT crgeo_status crgeo_certify(int n, const char* R_text, int grid_resolution,
                                        char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo::FamilyParams par{n, parse_R(R_text)};
    json inputs{{"n", n}, {"R", crgeo::json_rational(par.R)}, {"grid", grid_resolution}};
    json results = crgeo::report_certify(par, grid_resolution);
    const bool met = results.at("bounds_met").get<bool>();
    return {crgeo::make_report("certify", inputs, results, false),
            met ? CRGEO_OK : CRGEO_VERIFY_FAILED};
  });
}

CRGEO_EXPORT crgeo_status crgeo_esstype(const crgeo_surface* s, int degree_cap, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo_surface& surf = deref(s);
    const int d = default_degree(degree_cap);
    json inputs{{"rho", surf.text}, {"n", surf.m.n}, {"degree_cap", d}};
    json results = crgeo::report_esstype(surf.m, d);
    const bool stable = results.at("essential_type").at("stabilized").get<bool>();
    return {crgeo::make_report("esstype", inputs, results, true),
            stable ? CRGEO_OK : CRGEO_INCONCLUSIVE};
  });
}

CRGEO_EXPORT crgeo_status crgeo_mult(int n, const char* const* components, int component_count,
                                     int degree_cap, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const int d = default_degree(degree_cap);
    const crgeo::MapGerm h = crgeo::MapGerm::make(parse_components(n, components, component_count));
    json comps = json::array();
    for (int i = 0; i < component_count; ++i) comps.push_back(components[i]);
    json inputs{{"n", n}, {"components", comps}, {"degree_cap", d}};
    json results = crgeo::report_mult(h, d);
    const bool stable = results.at("multiplicity").at("stabilized").get<bool>();
    return {crgeo::make_report("mult", inputs, results, true),
            stable ? CRGEO_OK : CRGEO_INCONCLUSIVE};
  });
}

CRGEO_EXPORT crgeo_status crgeo_mapcheck(const crgeo_surface* source, const crgeo_surface* target,
                                         const char* const* map_components, int component_count,
                                         int degree_cap, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo_surface& src = deref(source);
    const crgeo_surface& tgt = deref(target);
    if (component_count != tgt.m.n + 1)
      throw crgeo::Error(crgeo::Status::bad_argument,
                         "need one map component per target coordinate");
    const int d = default_degree(degree_cap);
    const std::vector<crgeo::Poly> h = parse_components(src.m.n, map_components, component_count);
    json comps = json::array();
    for (int i = 0; i < component_count; ++i) comps.push_back(map_components[i]);
    json inputs{{"source", src.text},
                {"target", tgt.text},
                {"components", comps},
                {"degree_cap", d}};
    json results = crgeo::report_mapcheck(src.m.rho, tgt.m.rho, h, d);
    return {crgeo::make_report("mapcheck", inputs, results, true),
            results.at("holds").get<bool>() ? CRGEO_OK : CRGEO_VERIFY_FAILED};
  });
}

CRGEO_EXPORT crgeo_status crgeo_qsolve(const crgeo_surface* s, int degree_cap, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo_surface& surf = deref(s);
    const int d = default_degree(degree_cap);
    json inputs{{"rho", surf.text}, {"n", surf.m.n}, {"degree_cap", d}};
    json results = crgeo::report_qsolve(surf.m, d);
    return {crgeo::make_report("q-solve", inputs, results, true),
            results.at("reality").get<bool>() ? CRGEO_OK : CRGEO_VERIFY_FAILED};
  });
}

CRGEO_EXPORT crgeo_status crgeo_transform(const crgeo_surface* s, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo_surface& surf = deref(s);
    json inputs{{"rho", surf.text}, {"n", surf.m.n}};
    json results = crgeo::report_transform(surf.m.rho);
    return {crgeo::make_report("transform", inputs, results, true),
            results.at("real").get<bool>() ? CRGEO_OK : CRGEO_VERIFY_FAILED};
  });
}

CRGEO_EXPORT crgeo_status crgeo_verify(int n, const char* R_text, int grid_resolution,
                                       unsigned long seed, char** json_out) {
  return guarded(json_out, [&]() -> Outcome {
    const crgeo::FamilyParams par{n, parse_R(R_text)};
    json inputs{{"n", n},
                {"R", crgeo::json_rational(par.R)},
                {"grid", grid_resolution},
                {"seed", seed}};
    json results = crgeo::report_verify(par, grid_resolution, seed);
    return {crgeo::make_report("verify-paper", inputs, results, false),
            results.at("all_pass").get<bool>() ? CRGEO_OK : CRGEO_VERIFY_FAILED};
  });
}

}  // extern "C"
