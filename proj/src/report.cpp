#include "report.hpp"

#include <algorithm>

namespace crgeo {

namespace {

constexpr const char* kVersion = "1.0.0";

json json_exponents(const Exponents& e) {
  json out = json::array();
  for (int32_t x : e) out.push_back(x);
  return out;
}

// multi-indices over n slots with |I| <= cap, graded order
std::vector<Exponents> multi_indices_upto(int n, int cap) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(n), 0);
  const auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<std::size_t>(slot)] = k;
      self(self, slot + 1, remaining - k);
      cur[static_cast<std::size_t>(slot)] = 0;
    }
  };
  rec(rec, 0, cap);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace

json json_rational(const Rational& q) { return rational_str(q); }

json json_complex(const GaussianRational& g) { return g.str(); }

json json_point(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(c.str());
  return out;
}

json json_signature(const Signature& s) { return json::array({s.plus, s.minus, s.zero}); }

json json_codim(const CodimReport& r) {
  json per = json::array();
  for (const auto& [d, c] : r.per_degree) per.push_back(json::array({d, c}));
  return json{{"stabilized", r.stabilized},
              {"value", r.value},
              {"degree_cap", r.degree_cap},
              {"per_degree", per}};
}

json json_certificate(const Certificate& c) {
  json steps = json::array();
  for (const CertStep& st : c.steps)
    steps.push_back(json{{"claim", st.claim}, {"witness", st.witness}, {"checked", st.checked}});
  return json{{"holds", c.holds}, {"steps", steps}};
}

json json_oracle(const OracleReport& r) {
  return json{{"minimum", json_rational(r.minimum)},
              {"argmin", json_point(r.argmin)},
              {"samples", r.samples},
              {"consistent", r.consistent}};
}

json json_nondeg(const NondegeneracyReport& r) {
  json ranks = json::array();
  for (const auto& [k, rk] : r.ranks) ranks.push_back(json::array({k, rk}));
  json witness = json::array();
  for (const Exponents& e : r.witness) witness.push_back(json_exponents(e));
  return json{{"order", r.order}, {"k_max", r.k_max}, {"ranks", ranks}, {"witness", witness}};
}

json make_report(const std::string& command, json inputs, json results, bool exact) {
  return json{{"command", command},
              {"version", kVersion},
              {"exact", exact},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

json report_analyze(const Hypersurface& m, const Point& p, int k_max) {
  if (!on_hypersurface(m, p)) throw PreconditionError("the point does not lie on the surface");
  if (!is_smooth_at(m, p)) throw PreconditionError("the surface is not smooth at the point");
  const Signature sig = hermitian_signature(tangent_levi_form(m, p));
  const NondegeneracyReport nd = nondegeneracy_order(m, p, k_max);
  return json{{"point", json_point(p)},
              {"smooth", true},
              {"signature", json_signature(sig)},
              {"strictly_pseudoconvex", is_strictly_pseudoconvex_at(m, p)},
              {"nondegeneracy", json_nondeg(nd)}};
}

json report_construct(const FamilyParams& par, int count, unsigned long seed) {
  const Poly rho = make_rho(par);
  json samples = json::array();
  for (const Point& p : sample_points_on_M(par, count, seed)) samples.push_back(json_point(p));
  const SmoothnessReport smooth = smoothness_check(par, std::min(count, 20), seed);
  const CompactnessReport compact = compactness_check(rho);
  return json{{"rho", rho.str()},
              {"threshold", json_rational(derived_R_threshold(par.n))},
              {"compact", compact.compact},
              {"compactness_margin", json_rational(compact.coefficient)},
              {"positivity", json_certificate(positivity_certificate(par))},
              {"pseudoconvexity", json_certificate(pseudoconvexity_certificate(par))},
              {"puncture", json_certificate(puncture_certificate(par))},
              {"smoothness",
               json{{"certified", smooth.certified},
                    {"samples_checked", smooth.samples_checked},
                    {"chain", json_certificate(smooth.chain)}}},
              {"sample_points", samples}};
}

json report_certify(const FamilyParams& par, int resolution) {
  const Poly p = make_PR(par);
  const Certificate pos = positivity_certificate(par);
  const Certificate psc = pseudoconvexity_certificate(par);
  const OracleReport smin = sphere_min_oracle(p, resolution);
  const OracleReport lmin = levi_min_oracle(p, resolution, Rational(1, 1024));
  const Rational sphere_bound = par.R - Rational(2 * par.n);
  const Rational levi_bound = Rational(2) * par.R - Rational(6);
  const bool met = pos.holds && psc.holds && smin.consistent && lmin.consistent &&
                   smin.minimum >= sphere_bound && lmin.minimum >= levi_bound;
  return json{{"positivity", json_certificate(pos)},
              {"pseudoconvexity", json_certificate(psc)},
              {"sphere_min", json_oracle(smin)},
              {"sphere_bound", json_rational(sphere_bound)},
              {"levi_min", json_oracle(lmin)},
              {"levi_bound", json_rational(levi_bound)},
              {"bounds_met", met}};
}

json report_esstype(const Hypersurface& m, int degree_cap) {
  const Jet q = solve_graph(m, degree_cap);
  const CodimReport rep = esstype_jet(q_coefficients(q), m.n, degree_cap);
  return json{{"degree_cap", degree_cap},
              {"normal_coordinates", is_normal_coordinates(q)},
              {"reality", reality_check(q)},
              {"essential_type", json_codim(rep)}};
}

json report_mult(const MapGerm& h, int degree_cap) {
  json comps = json::array();
  for (const Poly& c : h.components) comps.push_back(c.str());
  return json{{"degree_cap", degree_cap},
              {"components", comps},
              {"multiplicity", json_codim(multiplicity_jet(h, degree_cap))}};
}

json report_mapcheck(const Poly& rho_source, const Poly& rho_target,
                     const std::vector<Poly>& h, int degree_cap) {
  const MapIdentityReport rep = verify_map_identity(rho_source, rho_target, h, degree_cap);
  return json{{"degree_cap", degree_cap},
              {"holds", rep.holds},
              {"exact_polynomial", rep.exact_polynomial},
              {"multiplier_constant", json_complex(rep.a0)}};
}

json report_qsolve(const Hypersurface& m, int degree_cap) {
  const Jet q = solve_graph(m, degree_cap);
  return json{{"degree_cap", degree_cap},
              {"Q", q.body.str()},
              {"reality", reality_check(q)},
              {"normal_coordinates", is_normal_coordinates(q)}};
}

json report_transform(const Poly& rho) {
  const TransformedSurface th = transform_to_infinity(rho);
  return json{{"rho_hat", th.rho_hat.str()},
              {"clearing_degree", th.clearing_degree},
              {"real", th.rho_hat.is_real()}};
}

json report_verify(const FamilyParams& par, int resolution, unsigned long seed) {
  const int n = par.n;
  const Poly rho = make_rho(par);
  const Hypersurface m = Hypersurface::from_poly(rho);
  const Point origin = Point::origin(n);

  json steps = json::array();
  bool all_pass = true;
  std::string first_failure;
  const auto step = [&](const std::string& name, bool pass, json detail) {
    steps.push_back(json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
    if (!pass && all_pass) first_failure = name;
    all_pass = all_pass && pass;
  };

  step("defining function is real", rho.is_real(), json{{"rho", rho.str()}});

  {
    bool ok = m.rho_w().evaluate(origin) == GaussianRational(Rational(0), Rational(1, 2));
    json grad = json::array();
    for (int k = 1; k <= n; ++k) {
      const GaussianRational g = m.rho_z(k).evaluate(origin);
      ok = ok && g.is_zero();
      grad.push_back(json_complex(g));
    }
    grad.push_back(json_complex(m.rho_w().evaluate(origin)));
    step("gradient at the origin is (0,..,0,i/2)", ok, json{{"gradient", grad}});
  }

  // values (L^I rho_{z_1..z_n})(0) for |I| <= 3: 6 on the diagonal at I =
  // 3 e_j, zero everywhere else
  {
    const auto bracket_row = [&](const Exponents& idx) {
      std::vector<GaussianRational> row;
      for (int k = 1; k <= n; ++k) {
        const RationalFunction f{m.rho_z(k), 0};
        row.push_back(rf_evaluate(m, cr_apply_multi(m, idx, f), origin));
      }
      return row;
    };

    bool diag_ok = true;
    json diag = json::array();
    for (int j = 1; j <= n; ++j) {
      Exponents idx(static_cast<std::size_t>(n), 0);
      idx[static_cast<std::size_t>(j - 1)] = 3;
      const auto row = bracket_row(idx);
      json vals = json::array();
      for (int k = 1; k <= n; ++k) {
        const GaussianRational expect = k == j ? GaussianRational(6) : GaussianRational(0);
        diag_ok = diag_ok && row[static_cast<std::size_t>(k - 1)] == expect;
        vals.push_back(json_complex(row[static_cast<std::size_t>(k - 1)]));
      }
      diag.push_back(json{{"index", json_exponents(idx)}, {"values", vals}});
    }
    step("third-order diagonal brackets equal six", diag_ok, json{{"rows", diag}});

    bool rest_ok = true;
    int rows_checked = 0;
    for (const Exponents& idx : multi_indices_upto(n, 3)) {
      const bool is_diag_cube =
          total_degree(idx) == 3 &&
          *std::max_element(idx.begin(), idx.end()) == 3;
      if (is_diag_cube) continue;
      for (const GaussianRational& v : bracket_row(idx)) rest_ok = rest_ok && v.is_zero();
      ++rows_checked;
    }
    step("all other brackets through order three vanish", rest_ok,
         json{{"rows_checked", rows_checked}});
  }

  {
    const NondegeneracyReport nd = nondegeneracy_order(m, origin, n + 3);
    step("nondegeneracy order at the origin is three", nd.order == 3, json_nondeg(nd));
  }

  {
    const CompactnessReport c = compactness_check(rho);
    step("zero set is compact", c.compact,
         json{{"degree", c.degree}, {"margin", json_rational(c.coefficient)}});
  }

  {
    const SmoothnessReport s = smoothness_check(par, 20, seed);
    step("surface is smooth", s.certified,
         json{{"samples_checked", s.samples_checked}, {"chain", json_certificate(s.chain)}});
  }

  {
    const json cert = report_certify(par, resolution);
    step("positivity and convexity certificates with grid oracles",
         cert.at("bounds_met").get<bool>(), cert);
  }

  {
    const TransformedSurface th = transform_to_infinity(rho);
    const Hypersurface mhat = Hypersurface::from_poly(th.rho_hat);
    const Certificate punct = puncture_certificate(par);
    bool ok = th.rho_hat.is_real() && punct.holds;
    int images = 0;
    const Signature expect{n, 0, 0};
    for (const Point& p : sample_points_on_M(par, 20, seed)) {
      const Point q = transform_point(p);
      ok = ok && on_hypersurface(mhat, q) &&
           hermitian_signature(tangent_levi_form(mhat, q)) == expect;
      ++images;
    }
    ok = ok && images >= 20;
    step("transform to infinity is real and strictly pseudoconvex on samples", ok,
         json{{"clearing_degree", th.clearing_degree},
              {"image_points", images},
              {"puncture", json_certificate(punct)}});
  }

  {
    const Jet q = solve_graph(m, 6);
    step("solved graph satisfies the reality condition", reality_check(q),
         json{{"degree_cap", 6}});
  }

  return json{{"steps", steps},
              {"all_pass", all_pass},
              {"first_failure", all_pass ? json() : json(first_failure)},
              {"threshold", json_rational(derived_R_threshold(n))}};
}

}  // namespace crgeo
