// Acceptance gate: every shipped claim, one PASS/FAIL line each. Exits
// nonzero if any criterion fails or runs past its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "certify.hpp"
#include "crfields.hpp"
#include "family.hpp"
#include "jets.hpp"
#include "parse.hpp"

using namespace crgeo;

namespace {

int g_failures = 0;

void criterion(int index, const char* name, double budget_s, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    ok = false;
    note += " [over budget]";
  }
  if (!ok) ++g_failures;
  std::printf("%s  criterion %d: %-58s %7.2fs / %.0fs%s\n", ok ? "PASS" : "FAIL", index, name,
              secs, budget_s, note.c_str());
  std::fflush(stdout);
}

GaussianRational grat(long re_n, long re_d, long im_n = 0, long im_d = 1) {
  return GaussianRational(Rational(re_n, re_d), Rational(im_n, im_d));
}

// --- randomized inputs for the property suites ------------------------------

GaussianRational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return grat(num(rng), den(rng), num(rng), den(rng));
}

Poly random_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> expo(0, max_deg);
  const VarTable v(n);
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(v.slots()), 0);
    for (int s = 0; s < v.slots(); ++s) e[static_cast<std::size_t>(s)] = expo(rng);
    p.add_term(e, random_coeff(rng));
  }
  return p;
}

Poly random_real_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
  const Poly h = random_poly(rng, n, max_deg, terms);
  return h + h.conj_involution();
}

Point random_point(std::mt19937_64& rng, int n) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= n; ++k) c.push_back(random_coeff(rng));
  return Point(n, std::move(c));
}

GMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  GMatrix b(static_cast<std::size_t>(dim), GRow(static_cast<std::size_t>(dim)));
  for (auto& row : b)
    for (auto& x : row) x = random_coeff(rng);
  GMatrix a = b;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
          b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].conj();
  return a;
}

GMatrix random_invertible(std::mt19937_64& rng, int dim) {
  for (;;) {
    GMatrix s(static_cast<std::size_t>(dim), GRow(static_cast<std::size_t>(dim)));
    for (auto& row : s)
      for (auto& x : row) x = random_coeff(rng);
    if (rank_exact(s) == dim) return s;
  }
}

// --- criteria ----------------------------------------------------------------

// Gradient at 0, third-order brackets, vanishing lower brackets, order 3.
bool quartic_reproduction(int n, long R) {
  const FamilyParams par{n, Rational(R)};
  const Hypersurface m = Hypersurface::from_poly(make_rho(par));
  const Point o = Point::origin(n);

  // gradient: (0, .., 0, -1/(2i)) = (0, .., 0, i/2)
  for (int k = 1; k <= n; ++k)
    if (!m.rho_z(k).evaluate(o).is_zero()) return false;
  if (!(m.rho_w().evaluate(o) == grat(0, 1, 1, 2))) return false;

  // bracket rows of the z-part of the gradient, all |I| <= 3
  const VarTable v(n);
  std::vector<Exponents> indices;  // over the n CR fields
  std::function<void(Exponents&, int, int)> build = [&](Exponents& cur, int pos, int left) {
    if (pos == n) {
      indices.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[static_cast<std::size_t>(pos)] = c;
      build(cur, pos + 1, left - c);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  Exponents cur(static_cast<std::size_t>(n), 0);
  build(cur, 0, 3);

  for (const Exponents& idx : indices) {
    int total = 0, maxc = 0;
    for (Exponents::value_type c : idx) {
      total += static_cast<int>(c);
      maxc = std::max(maxc, static_cast<int>(c));
    }
    const bool diag_cube = (total == 3 && maxc == 3);
    for (int k = 1; k <= n; ++k) {
      const RationalFunction f{m.rho_z(k), 0};
      const GaussianRational val = rf_evaluate(m, cr_apply_multi(m, idx, f), o);
      const bool is_hit = diag_cube && idx[static_cast<std::size_t>(k - 1)] == 3;
      if (is_hit && !(val == GaussianRational(6))) return false;
      if (!is_hit && !val.is_zero()) return false;
    }
  }

  return nondegeneracy_order(m, o, n + 3).order == 3;
}

bool pseudoconvexity_dichotomy(int n, long R) {
  const FamilyParams par{n, Rational(R)};
  const Hypersurface m = Hypersurface::from_poly(make_rho(par));
  const std::vector<Point> pts = sample_points_on_M(par, 20, 2026);
  if (static_cast<int>(pts.size()) < 20) return false;
  for (const Point& p : pts) {
    if (p.is_origin() || !on_hypersurface(m, p)) return false;
    if (!(hermitian_signature(tangent_levi_form(m, p)) == Signature{n, 0, 0})) return false;
  }
  return hermitian_signature(tangent_levi_form(m, Point::origin(n))) == Signature{0, 0, n};
}

bool certificates_vs_oracles() {
  const FamilyParams par{1, Rational(10)};
  if (!positivity_certificate(par).holds) return false;
  if (!pseudoconvexity_certificate(par).holds) return false;
  const Poly p = make_PR(par);
  const OracleReport smin = sphere_min_oracle(p, 32);
  const OracleReport lmin = levi_min_oracle(p, 32, Rational(1, 1024));
  return smin.consistent && smin.minimum >= Rational(8) && lmin.consistent &&
         lmin.minimum >= Rational(14);
}

bool ellipsoid_identity() {
  const Poly sphere = parse_poly("|z1|^2 + |w|^2 - 1", 1);
  const VarTable v(1);
  for (int p = 2; p <= 3; ++p) {
    for (int q = 2; q <= 3; ++q) {
      const std::string rep =
          "|z1^" + std::to_string(p) + "|^2 + |w^" + std::to_string(q) + "|^2 - 1";
      const Poly ellipsoid = parse_poly(rep, 1);
      const Poly composed =
          sphere.substitute(v.z(1), Poly::variable(1, v.z(1)).pow(static_cast<unsigned>(p)))
              .substitute(v.zbar(1), Poly::variable(1, v.zbar(1)).pow(static_cast<unsigned>(p)))
              .substitute(v.w(), Poly::variable(1, v.w()).pow(static_cast<unsigned>(q)))
              .substitute(v.wbar(), Poly::variable(1, v.wbar()).pow(static_cast<unsigned>(q)));
      if (!(composed - ellipsoid).is_zero()) return false;
    }
  }
  return true;
}

bool jet_suite() {
  // sphere representative: essential type 1, settled by degree 4
  {
    const Jet q = solve_graph(Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2", 1)), 4);
    const CodimReport et = esstype_jet(q_coefficients(q), 1, 4);
    if (!(et.stabilized && et.value == 1)) return false;
  }
  // quartic circular model: essential type 2
  {
    const Jet q = solve_graph(Hypersurface::from_poly(parse_poly("-Im(w) + |z1^2|^2", 1)), 6);
    const CodimReport et = esstype_jet(q_coefficients(q), 1, 6);
    if (!(et.stabilized && et.value == 2)) return false;
  }
  // monomial maps against the standard-monomial count
  const VarTable v(1);
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      const MapGerm h = MapGerm::make({Poly::variable(1, v.z(1)).pow(static_cast<unsigned>(p)),
                                       Poly::variable(1, v.w()).pow(static_cast<unsigned>(q))});
      const CodimReport mu = multiplicity_jet(h, 10);
      // brute force: monomials z^i w^j outside the staircase of (z^p, w^q)
      int standard = 0;
      for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j)
          if (i < p && j < q) ++standard;
      if (!(mu.stabilized && mu.value == standard && mu.value == p * q)) return false;
    }
  }
  // common zero divisor: never stabilizes
  const MapGerm bad = MapGerm::make(
      {Poly::variable(1, v.z(1)).pow(2), Poly::variable(1, v.z(1)) * Poly::variable(1, v.w())});
  return !multiplicity_jet(bad, 8).stabilized;
}

bool reality_and_corruption() {
  const Hypersurface m = Hypersurface::from_poly(make_rho(FamilyParams{1, Rational(10)}));
  const Jet q = solve_graph(m, 6);
  if (!reality_check(q)) return false;

  // corrupt the first non-constant coefficient off the pure-tau axis
  const VarTable v(1);
  Poly body = q.body;
  for (const auto& [e, c] : q.body.terms) {
    const bool pure_tau = total_degree(e) == e[static_cast<std::size_t>(v.wbar())];
    if (pure_tau) continue;
    body.add_term(e, GaussianRational(1));  // c -> c + 1
    break;
  }
  if (body == q.body) return false;  // nothing to corrupt: not this surface
  return !reality_check(Jet::make(body, q.cap, jetvars::graph));
}

bool transform_strict_pseudoconvexity(int n, long R) {
  const FamilyParams par{n, Rational(R)};
  const Poly rho = make_rho(par);
  const TransformedSurface hat = transform_to_infinity(rho);
  if (!hat.rho_hat.is_real()) return false;
  const Hypersurface mhat = Hypersurface::from_poly(hat.rho_hat);
  const std::vector<Point> pts = sample_points_on_M(par, 20, 77);
  if (static_cast<int>(pts.size()) < 20) return false;
  for (const Point& p : pts) {
    const Point img = transform_point(p);
    if (!on_hypersurface(mhat, img)) return false;
    if (!is_strictly_pseudoconvex_at(mhat, img, Orientation::as_given)) return false;
  }
  return true;
}

bool proposition_check() {
  const Poly ellipsoid = parse_poly("|z1^2|^2 + |w^2|^2 - 1", 1);
  const Poly sphere = parse_poly("|z1|^2 + |w|^2 - 1", 1);
  const Point p0(1, {grat(38, 41, 14, 41), grat(15, 41, 12, 41)});
  const Hypersurface ms = Hypersurface::from_poly(ellipsoid);
  if (!ellipsoid.evaluate(p0).is_zero()) return false;
  // Levi-nondegenerate base point
  if (!(hermitian_signature(tangent_levi_form(ms, p0)) == Signature{1, 0, 0})) return false;

  const PointGerm src = solve_graph_at(ms, p0, 4);
  const Point image(1, {p0.coords[0] * p0.coords[0], p0.coords[1] * p0.coords[1]});
  const PointGerm tgt = solve_graph_at(Hypersurface::from_poly(sphere), image, 4);
  const VarTable v(1);
  const MapGerm germ = map_germ_at(
      {Poly::variable(1, v.z(1)).pow(2), Poly::variable(1, v.w()).pow(2)}, p0, src);
  const PropReport rep =
      check_prop_multid(q_coefficients(src.q), 1, germ, q_coefficients(tgt.q), 1, 4);
  return rep.conclusive && rep.inclusion_holds && rep.mult.value == 1 &&
         rep.esstype.value == 1 && rep.inequality_holds;
}

bool property_suites() {
  std::mt19937_64 rng(20260814);

  // ring axioms
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const Poly a = random_poly(rng, n, 2, 3);
    const Poly b = random_poly(rng, n, 2, 3);
    const Poly c = random_poly(rng, n, 2, 3);
    if (!((a + b) + c == a + (b + c))) return false;
    if (!(a * b == b * a)) return false;
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * (b + c) == a * b + a * c)) return false;
    if (!(a + Poly(n) == a)) return false;
    if (!(a - a == Poly(n))) return false;
  }

  // derivation rule
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const VarTable v(n);
    const int slot = static_cast<int>(rng() % static_cast<unsigned>(v.slots()));
    const Poly a = random_poly(rng, n, 3, 3);
    const Poly b = random_poly(rng, n, 3, 3);
    if (!((a * b).derivative(slot) == a.derivative(slot) * b + a * b.derivative(slot)))
      return false;
  }

  // involution
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const Poly a = random_poly(rng, n, 3, 4);
    const Poly b = random_poly(rng, n, 3, 4);
    if (!(a.conj_involution().conj_involution() == a)) return false;
    if (!((a * b).conj_involution() == a.conj_involution() * b.conj_involution())) return false;
    if (!((a + b).conj_involution() == a.conj_involution() + b.conj_involution())) return false;
  }

  // signature invariance under congruence by an invertible matrix
  for (int i = 0; i < 100; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const GMatrix a = random_hermitian(rng, dim);
    const GMatrix s = random_invertible(rng, dim);
    GMatrix m(static_cast<std::size_t>(dim), GRow(static_cast<std::size_t>(dim)));
    for (int r = 0; r < dim; ++r)  // m = s^* a s
      for (int c = 0; c < dim; ++c)
        for (int k = 0; k < dim; ++k)
          for (int l = 0; l < dim; ++l)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +
                s[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)].conj() *
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *
                    s[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)];
    if (!(hermitian_signature(m) == hermitian_signature(a))) return false;
  }

  // Levi-matrix Hermitianity at random points of random real polynomials
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const Poly f = random_real_poly(rng, n, 2, 4);
    const GMatrix a = levi_matrix(f, random_point(rng, n));
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c)
        if (!(a[r][c] == a[c][r].conj())) return false;
  }

  // grid refinement can only lower the sampled sphere minimum
  for (int i = 0; i < 100; ++i) {
    const Poly f = random_real_poly(rng, 1, 2, 3);
    const OracleReport coarse = sphere_min_oracle(f, 8);
    const OracleReport fine = sphere_min_oracle(f, 16);
    if (!(fine.minimum <= coarse.minimum)) return false;
  }

  return true;
}

}  // namespace

int main() {
  criterion(1, "quartic family reproduction (n=1 R=10, n=2 R=20)", 60.0, [] {
    return quartic_reproduction(1, 10) && quartic_reproduction(2, 20);
  });
  criterion(2, "pseudoconvexity dichotomy on 20 samples + origin", 120.0, [] {
    return pseudoconvexity_dichotomy(1, 10) && pseudoconvexity_dichotomy(2, 20);
  });
  criterion(3, "certificates vs sphere-grid oracles (resolution 32)", 300.0,
            certificates_vs_oracles);
  criterion(4, "ellipsoid pullback identity, p,q in {2,3}", 5.0, ellipsoid_identity);
  criterion(5, "jet suite: essential types and multiplicities", 60.0, jet_suite);
  criterion(6, "reality of the solved graph + corruption detection", 30.0,
            reality_and_corruption);
  criterion(7, "transform to infinity: strict pseudoconvexity on images", 120.0, [] {
    return transform_strict_pseudoconvexity(1, 10) && transform_strict_pseudoconvexity(2, 20);
  });
  criterion(8, "multiplicity vs essential type at a regular base point", 60.0,
            proposition_check);
  criterion(9, "property suites, 100 randomized cases each", 120.0, property_suites);

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
