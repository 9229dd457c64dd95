#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geometry.hpp"
#include "parse.hpp"

using namespace crgeo;

namespace {

GaussianRational gi(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

const char* kFamilyRho10 = "-Im(w) + 10*(|z1|^2+|w|^2)^2 + 2*Re(z1*conj(z1)^3)";

Poly random_real_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<long> num(-3, 3);
  Poly g(n);
  for (int i = 0; i < 5; ++i) {
    Exponents e(2 * n + 2, 0);
    for (auto& x : e) x = expo(rng);
    g.add_term(e, GaussianRational(Rational(num(rng)), Rational(num(rng))));
  }
  return g + g.conj_involution();
}

Point random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  std::vector<GaussianRational> c;
  for (int i = 0; i <= n; ++i)
    c.push_back(GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return Point(n, std::move(c));
}

}  // namespace

TEST_CASE("hermitian_signature basics") {
  CHECK(hermitian_signature({{gi(1), gi(0)}, {gi(0), gi(-1)}}) == Signature{1, 1, 0});
  CHECK(hermitian_signature(GMatrix(3, GRow(3))) == Signature{0, 0, 3});
  CHECK(hermitian_signature({{gi(4), gi(0)}, {gi(0), gi(2)}}) == Signature{2, 0, 0});
  CHECK_THROWS_AS(hermitian_signature({{gi(0), gi(1)}, {gi(2), gi(0)}}), PreconditionError);
}

TEST_CASE("levi_matrix examples") {
  Hypersurface sphere = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2", 1));
  GMatrix h = levi_matrix(sphere, Point::origin(1));
  CHECK(h == GMatrix{{gi(1), gi(0)}, {gi(0), gi(0)}});

  // P_R alone has zero complex Hessian at 0.
  Poly p10 = parse_poly("10*(|z1|^2+|w|^2)^2 + 2*Re(z1*conj(z1)^3)", 1);
  GMatrix hp = levi_matrix(p10, Point::origin(1));
  CHECK(hp == GMatrix(2, GRow(2)));

  // Hessian of s^2 at z1=1, w=0 is [[4,0],[0,2]].
  Poly s2 = parse_poly("(|z1|^2+|w|^2)^2", 1);
  Point p(1, {gi(1), gi(0)});
  CHECK(levi_matrix(s2, p) == GMatrix{{gi(4), gi(0)}, {gi(0), gi(2)}});
  CHECK(hermitian_signature(levi_matrix(s2, p)) == Signature{2, 0, 0});
}

TEST_CASE("on_hypersurface and smoothness") {
  Hypersurface family = Hypersurface::from_poly(parse_poly(kFamilyRho10, 1));
  CHECK(on_hypersurface(family, Point::origin(1)));
  Point zi(1, {gi(0), gi(0, 1)});
  CHECK_FALSE(on_hypersurface(family, zi));
  CHECK(is_smooth_at(family, Point::origin(1)));
  CHECK_THROWS_AS(is_smooth_at(family, zi), PreconditionError);

  Hypersurface sphere = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2", 1));
  Point p(1, {gi(1), gi(0, 2)});
  CHECK_FALSE(on_hypersurface(sphere, p));

  // rho = (Im w)^2 is singular at 0 (gradient vanishes on the zero set).
  Hypersurface degen = Hypersurface::from_poly(parse_poly("Im(w)^2", 1));
  CHECK_FALSE(is_smooth_at(degen, Point::origin(1)));
}

TEST_CASE("tangent_levi_form examples") {
  Hypersurface sphere = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2", 1));
  GMatrix t = tangent_levi_form(sphere, Point::origin(1));
  CHECK(t == GMatrix{{gi(1)}});
  CHECK(hermitian_signature(t) == Signature{1, 0, 0});
  CHECK(is_strictly_pseudoconvex_at(sphere, Point::origin(1)));

  Hypersurface family = Hypersurface::from_poly(parse_poly(kFamilyRho10, 1));
  GMatrix tf = tangent_levi_form(family, Point::origin(1));
  CHECK(tf == GMatrix{{gi(0)}});
  CHECK(hermitian_signature(tf) == Signature{0, 0, 1});
  CHECK_FALSE(is_strictly_pseudoconvex_at(family, Point::origin(1)));

  Hypersurface quadric = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2 - |z2|^2", 2));
  CHECK(hermitian_signature(tangent_levi_form(quadric, Point::origin(2))) == Signature{1, 1, 0});
}

TEST_CASE("orientation flag") {
  Hypersurface sphere = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2", 1));
  CHECK_FALSE(is_strictly_pseudoconvex_at(sphere, Point::origin(1), Orientation::flipped));
  Hypersurface flipped = Hypersurface::from_poly(parse_poly("Im(w) - |z1|^2", 1));
  CHECK(is_strictly_pseudoconvex_at(flipped, Point::origin(1), Orientation::flipped));
}

TEST_CASE("levi_matrix is Hermitian for random real polynomials") {
  std::mt19937_64 rng(4181);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + static_cast<int>(rng() % 2);
    Poly f = random_real_poly(rng, n);
    REQUIRE(f.is_real());
    Point p = random_point(rng, n);
    CHECK(is_hermitian(levi_matrix(f, p)));
  }
}

TEST_CASE("minus rho swaps plus and minus") {
  Hypersurface quadric = Hypersurface::from_poly(parse_poly("-Im(w) + |z1|^2 - |z2|^2", 2));
  Signature s = hermitian_signature(tangent_levi_form(quadric, Point::origin(2)));
  Hypersurface neg = Hypersurface::from_poly(-quadric.rho);
  Signature t = hermitian_signature(tangent_levi_form(neg, Point::origin(2)));
  CHECK(s.plus == t.minus);
  CHECK(s.minus == t.plus);
  CHECK(s.zero == t.zero);
}

TEST_CASE("signature invariant under scaling and invertible linear maps") {
  std::mt19937_64 rng(2971215073u);
  std::uniform_int_distribution<long> coef(-3, 3);
  Poly sphere_rho = parse_poly("-Im(w) + |z1|^2 + |z2|^2", 2);
  Poly family_rho = parse_poly("-Im(w) + 20*(|z1|^2+|z2|^2+|w|^2)^2 + "
                               "2*Re(z1*conj(z1)^3) + 2*Re(z2*conj(z2)^3)", 2);
  int cases = 0;
  std::vector<Poly> surfaces = {sphere_rho, family_rho};
  for (std::size_t which = 0; which < surfaces.size(); ++which) {
    const Poly& rho = surfaces[which];
    Hypersurface m = Hypersurface::from_poly(rho);
    Signature base = hermitian_signature(tangent_levi_form(m, Point::origin(2)));

    // positive rational scaling
    Hypersurface scaled = Hypersurface::from_poly(rho.scaled(GaussianRational(Rational(7, 3))));
    CHECK(hermitian_signature(tangent_levi_form(scaled, Point::origin(2))) == base);

    int goal = which == 0 ? 50 : 100;
    while (cases < goal) {
      // random invertible complex-linear map on the Z-block (conjugate map on the bar block)
      int n = 2;
      GMatrix a(n + 1, GRow(n + 1));
      for (auto& row : a)
        for (auto& x : row) x = GaussianRational(Rational(coef(rng)), Rational(coef(rng)));
      if (rank_exact(a) != n + 1) continue;
      ++cases;
      VarTable v(n);
      std::vector<Poly> subs(v.slots(), Poly(n));
      for (int s1 = 0; s1 <= n; ++s1) {
        Poly img(n), imgbar(n);
        for (int s2 = 0; s2 <= n; ++s2) {
          img += Poly::variable(n, s2).scaled(a[s1][s2]);
          imgbar += Poly::variable(n, v.conj_slot(s2)).scaled(a[s1][s2].conj());
        }
        subs[s1] = img;
        subs[v.conj_slot(s1)] = imgbar;
      }
      Poly moved = rho.substitute_all(subs);
      REQUIRE(moved.is_real());
      Hypersurface mm = Hypersurface::from_poly(moved);
      // the map fixes 0; compare inertia there
      Signature s = hermitian_signature(tangent_levi_form(mm, Point::origin(2)));
      CHECK(s == base);
    }
  }
  CHECK(cases >= 100);
}
