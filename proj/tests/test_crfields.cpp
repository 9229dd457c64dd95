#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crfields.hpp"
#include "parse.hpp"

using namespace crgeo;

namespace {

GaussianRational grat(long re_n, long re_d, long im_n = 0, long im_d = 1) {
  return GaussianRational(Rational(re_n, re_d), Rational(im_n, im_d));
}

Hypersurface surf(const std::string& text, int n) {
  return Hypersurface::from_poly(parse_poly(text, n));
}

Hypersurface family_surface(int n, long r) {
  std::string s = "|z1|^2";
  for (int k = 2; k <= n; ++k) s += " + |z" + std::to_string(k) + "|^2";
  std::string text = "-Im(w) + " + std::to_string(r) + "*(" + s + " + |w|^2)^2";
  for (int k = 1; k <= n; ++k) {
    std::string zk = "z" + std::to_string(k);
    text += " + 2*Re(" + zk + "*conj(" + zk + ")^3)";
  }
  return surf(text, n);
}

Poly random_graph_rho(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  VarTable v(n);
  auto random_holo = [&]() {
    Poly p(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      Exponents e(static_cast<std::size_t>(v.slots()), 0);
      int total = 0;
      for (int k = 0; k < n; ++k) {
        e[static_cast<std::size_t>(k)] = expo(rng);
        total += e[static_cast<std::size_t>(k)];
      }
      if (total == 0) continue;
      p.add_term(e, grat(num(rng), den(rng), num(rng), den(rng)));
    }
    return p;
  };
  Poly g = random_holo(), h = random_holo();
  Poly rho = Poly::variable(n, v.w()).scaled(grat(0, 1, 1, 2)) +
             Poly::variable(n, v.wbar()).scaled(grat(0, 1, -1, 2));
  rho += (g + g.conj_involution()).scaled(GaussianRational(Rational(1, 2)));
  rho += g * g.conj_involution();
  rho += h * h.conj_involution();
  return rho;
}

}  // namespace

TEST_CASE("basis fields: folded constant denominator") {
  Hypersurface m = surf("-Im(w) + |z1|^2", 1);
  VarTable v(1);
  auto basis = cr_basis(m);
  REQUIRE(basis.size() == 1);
  const RationalVectorField& L = basis[0];
  CHECK(L.denominator == Poly::constant(1, GaussianRational(1)));
  CHECK(L.numerators[static_cast<std::size_t>(v.zbar(1))] == Poly::constant(1, GaussianRational(1)));
  // -(rho_zbar / rho_wbar) = -(z / (-i/2)) = -2i z
  CHECK(L.numerators[static_cast<std::size_t>(v.wbar())] ==
        Poly::variable(1, v.z(1)).scaled(grat(0, 1, -2, 1)));
  for (int s = 0; s < v.slots(); ++s)
    if (s != v.zbar(1) && s != v.wbar())
      CHECK(L.numerators[static_cast<std::size_t>(s)].is_zero());
}

TEST_CASE("basis fields: rational denominator on the unit sphere") {
  Hypersurface m = surf("|z1|^2 + |w|^2 - 1", 1);
  VarTable v(1);
  auto basis = cr_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].denominator == Poly::variable(1, v.w()));
  CHECK(basis[0].numerators[static_cast<std::size_t>(v.zbar(1))] == Poly::variable(1, v.w()));
  CHECK(basis[0].numerators[static_cast<std::size_t>(v.wbar())] == -Poly::variable(1, v.z(1)));
}

TEST_CASE("tangency: L_j rho vanishes identically") {
  std::vector<Hypersurface> surfaces;
  surfaces.push_back(family_surface(1, 10));
  surfaces.push_back(family_surface(2, 10));
  surfaces.push_back(surf("|z1|^2 + |w|^2 - 1", 1));
  std::mt19937_64 rng(411);
  for (int i = 0; i < 5; ++i)
    surfaces.push_back(Hypersurface::from_poly(random_graph_rho(rng, 1 + static_cast<int>(rng() % 2))));
  for (const Hypersurface& m : surfaces) {
    for (int j = 1; j <= m.n; ++j) {
      RationalFunction lr = cr_apply(m, j, RationalFunction{m.rho, 0});
      CHECK(lr.num.is_zero());
      CHECK(lr.den_pow == 2);
    }
  }
}

TEST_CASE("the rigid field with coefficient -2i P_zbar is not tangent") {
  // On the quartic surface, d/dzbar - 2i P_zbar d/dwbar applied to rho leaves
  // -4iR s w P_zbar: a residual of valuation 6, invisible below that order.
  for (long r : {5L, 10L}) {
    Hypersurface m = family_surface(1, r);
    VarTable v(1);
    Poly p_zbar = m.rho.derivative(v.zbar(1));  // -Im(w) part has no zbar term
    Poly rho_wbar = m.rho.derivative(v.wbar());
    Poly residual = p_zbar - (p_zbar * rho_wbar).scaled(grat(0, 1, 2, 1));
    Poly s = parse_poly("|z1|^2 + |w|^2", 1);
    Poly expect = (s * Poly::variable(1, v.w()) * p_zbar).scaled(grat(0, 1, -4 * r, 1));
    CHECK(residual == expect);
    CHECK_FALSE(residual.is_zero());
    CHECK(residual.low_degree() == 6);
  }
}

TEST_CASE("symbolic application: sphere representative values") {
  Hypersurface m = surf("-Im(w) + |z1|^2", 1);
  VarTable v(1);
  // L rho_z = L zbar = 1 everywhere
  RationalFunction f{m.rho.derivative(v.z(1)), 0};
  RationalFunction lf = cr_apply(m, 1, f);
  Point p(1, {grat(1, 1), grat(3, 1, 1, 1)});  // (1, 3+i) lies on M
  REQUIRE(on_hypersurface(m, p));
  CHECK(rf_evaluate(m, lf, p) == GaussianRational(1));
  CHECK(rf_evaluate(m, lf, Point::origin(1)) == GaussianRational(1));
  // second application is 0
  CHECK(rf_evaluate(m, cr_apply(m, 1, lf), p) == GaussianRational(0));
}

TEST_CASE("symbolic and jet computations agree on the quartic family") {
  Hypersurface m = family_surface(1, 10);
  VarTable v(1);
  RationalFunction rho_z{m.rho.derivative(v.z(1)), 0};
  RationalFunction rho_w{m.rho.derivative(v.w()), 0};

  // jet route: recentre at 0 (identity here), apply L on capped jets
  const int cap = 4;
  auto jet_of = [&](const Poly& f) { return Jet::make(f.truncated(cap), cap, jetvars::all); };
  Jet dinv = jet_of(m.rho.derivative(v.wbar())).inverse();
  Jet coeff = jet_of(m.rho.derivative(v.zbar(1))).mul(dinv);
  auto apply_jet = [&](const Jet& g) {
    return g.derivative(v.zbar(1)).sub(coeff.mul(g.derivative(v.wbar())));
  };

  Jet gz = jet_of(m.rho.derivative(v.z(1)));
  Jet gw = jet_of(m.rho.derivative(v.w()));
  RationalFunction sz = rho_z, sw = rho_w;
  Exponents one{1};
  for (int step = 1; step <= 3; ++step) {
    gz = apply_jet(gz);
    gw = apply_jet(gw);
    sz = cr_apply_multi(m, one, sz);
    sw = cr_apply_multi(m, one, sw);
    CHECK(rf_evaluate(m, sz, Point::origin(1)) == gz.body.constant_term());
    CHECK(rf_evaluate(m, sw, Point::origin(1)) == gw.body.constant_term());
  }
  // the third application is the first with a nonzero z-row entry
  CHECK(gz.body.constant_term() == GaussianRational(6));
}

TEST_CASE("nondegeneracy order: sphere representative is 1 everywhere") {
  Hypersurface m = surf("-Im(w) + |z1|^2", 1);
  for (const Point& p : {Point::origin(1), Point(1, {grat(1, 1), grat(3, 1, 1, 1)})}) {
    NondegeneracyReport rep = nondegeneracy_order(m, p, 4);
    CHECK(rep.order == 1);
    REQUIRE(rep.ranks.size() >= 2);
    CHECK(rep.ranks[0] == std::pair<int, int>(0, 1));
    CHECK(rep.ranks[1] == std::pair<int, int>(1, 2));
    REQUIRE(rep.witness.size() == 2);
    CHECK(total_degree(rep.witness[0]) == 0);
    CHECK(total_degree(rep.witness[1]) == 1);
  }
}

TEST_CASE("nondegeneracy order on the unit sphere") {
  Hypersurface m = surf("|z1|^2 + |w|^2 - 1", 1);
  Point p(1, {grat(3, 5), grat(4, 5)});
  REQUIRE(on_hypersurface(m, p));
  CHECK(nondegeneracy_order(m, p, 3).order == 1);
  // w = 0: the graph direction degenerates
  CHECK_THROWS_AS(nondegeneracy_order(m, Point(1, {grat(1, 1), grat(0, 1)}), 3),
                  PreconditionError);
  CHECK_THROWS_AS(nondegeneracy_order(m, Point::origin(1), 3), PreconditionError);  // not on M
}

TEST_CASE("quartic family: order 3 at the origin, independent of R and n") {
  for (long r : {5L, 10L, 100L}) {
    NondegeneracyReport rep = nondegeneracy_order(family_surface(1, r), Point::origin(1), 4);
    CHECK(rep.order == 3);
    REQUIRE(rep.ranks.size() == 4);
    CHECK(rep.ranks[0].second == 1);
    CHECK(rep.ranks[1].second == 1);
    CHECK(rep.ranks[2].second == 1);
    CHECK(rep.ranks[3].second == 2);
    REQUIRE(rep.witness.size() == 2);
    CHECK(total_degree(rep.witness[1]) == 3);
  }
  NondegeneracyReport rep2 = nondegeneracy_order(family_surface(2, 10), Point::origin(2), 5);
  CHECK(rep2.order == 3);
  CHECK(rep2.witness.size() == 3);
}

TEST_CASE("quartic family: composition order does not change the span") {
  for (int n : {1, 2}) {
    Hypersurface m = family_surface(n, 10);
    NondegeneracyReport fwd = nondegeneracy_order(m, Point::origin(n), n + 3, false);
    NondegeneracyReport rev = nondegeneracy_order(m, Point::origin(n), n + 3, true);
    CHECK(fwd.order == rev.order);
    CHECK(fwd.ranks == rev.ranks);
  }
}

TEST_CASE("nondegeneracy order is invariant under scaling and linear changes") {
  Hypersurface m = family_surface(2, 10);
  // scale rho by 7/3
  Hypersurface scaled = Hypersurface::from_poly(m.rho.scaled(grat(7, 3)));
  CHECK(nondegeneracy_order(scaled, Point::origin(2), 5).order == 3);

  // z1 -> i z2, z2 -> z1 (and the conjugate map on the bar slots)
  VarTable v(2);
  std::vector<Poly> values(static_cast<std::size_t>(v.slots()), Poly(2));
  values[static_cast<std::size_t>(v.z(1))] = Poly::variable(2, v.z(2)).scaled(grat(0, 1, 1, 1));
  values[static_cast<std::size_t>(v.z(2))] = Poly::variable(2, v.z(1));
  values[static_cast<std::size_t>(v.w())] = Poly::variable(2, v.w());
  values[static_cast<std::size_t>(v.zbar(1))] =
      Poly::variable(2, v.zbar(2)).scaled(grat(0, 1, -1, 1));
  values[static_cast<std::size_t>(v.zbar(2))] = Poly::variable(2, v.zbar(1));
  values[static_cast<std::size_t>(v.wbar())] = Poly::variable(2, v.wbar());
  Poly moved = m.rho.substitute_all(values);
  CHECK(moved != m.rho);  // the cubic terms pick up a sign
  Hypersurface m2 = Hypersurface::from_poly(moved);
  CHECK(nondegeneracy_order(m2, Point::origin(2), 5).order == 3);
}

TEST_CASE("quartic model |z|^4 is nowhere finitely nondegenerate at 0") {
  Hypersurface m = surf("-Im(w) + |z1^2|^2", 1);
  NondegeneracyReport rep = nondegeneracy_order(m, Point::origin(1), 6);
  CHECK(rep.order == -1);
  for (const auto& [k, r] : rep.ranks) CHECK(r == 1);
  CHECK(rep.witness.empty());
}
