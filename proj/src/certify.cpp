#include "certify.hpp"

#include <set>

namespace crgeo {

namespace {

// (x, y) with x^2 + y^2 = 1 from the half-angle slope t
std::pair<Rational, Rational> circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = Rational(1) + t2;
  Rational x = (Rational(1) - t2) / den;
  Rational y = (Rational(2) * t) / den;
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

int quarter(int resolution) {
  if (resolution <= 0 || resolution % 4 != 0)
    throw Error(Status::bad_argument, "grid resolution must be a positive multiple of four");
  return resolution / 4;
}

// nonnegative amplitude splittings (xi_0 .. xi_{slots-1}), sum of squares 1
void amplitudes(int slots, int m, std::vector<Rational>& prefix,
                std::vector<std::vector<Rational>>& out) {
  if (slots == 1) {
    prefix.push_back(Rational(1));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= m; ++k) {
    Rational t(k, 1);
    t /= m;
    t.canonicalize();
    auto [c, s] = circle_point(t);
    std::vector<Rational> tail_prefix;
    std::vector<std::vector<Rational>> tails;
    amplitudes(slots - 1, m, tail_prefix, tails);
    for (const auto& tail : tails) {
      prefix.push_back(c);
      std::vector<Rational> full = prefix;
      for (const Rational& q : tail) full.push_back(s * q);
      out.push_back(std::move(full));
      prefix.pop_back();
    }
  }
}

bool is_homogeneous(const Poly& f, int& degree) {
  if (f.is_zero()) return false;
  degree = f.degree();
  return f.low_degree() == degree;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> circle_grid(int resolution) {
  const int m = quarter(resolution);
  std::set<std::pair<Rational, Rational>> pts;
  for (int k = 0; k <= m; ++k) {
    Rational t(k, 1);
    t /= m;
    t.canonicalize();
    auto [x, y] = circle_point(t);
    pts.insert({x, y});
    pts.insert({-x, y});
    pts.insert({x, -y});
    pts.insert({-x, -y});
  }
  return std::vector<std::pair<Rational, Rational>>(pts.begin(), pts.end());
}

std::vector<Point> sphere_grid(int n, int resolution) {
  const int m = quarter(resolution);
  const int slots = n + 1;
  std::vector<std::vector<Rational>> amps;
  std::vector<Rational> prefix;
  amplitudes(slots, m, prefix, amps);
  const auto phases = circle_grid(resolution);

  std::set<Point> pts;
  std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
  for (const auto& amp : amps) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<GaussianRational> coords;
      for (int a = 0; a < slots; ++a) {
        const auto& ph = phases[idx[static_cast<std::size_t>(a)]];
        coords.emplace_back(amp[static_cast<std::size_t>(a)] * ph.first,
                            amp[static_cast<std::size_t>(a)] * ph.second);
      }
      pts.insert(Point(n, std::move(coords)));
      int a = 0;
      while (a < slots && ++idx[static_cast<std::size_t>(a)] == phases.size())
        idx[static_cast<std::size_t>(a++)] = 0;
      if (a == slots) break;
    }
  }
  return std::vector<Point>(pts.begin(), pts.end());
}

OracleReport sphere_min_oracle(const Poly& f, int resolution) {
  if (!f.is_real()) throw PreconditionError("sphere minimum needs a real polynomial");
  const int n = f.n;
  const Poly s = [&] {
    Poly acc(n);
    const VarTable v(n);
    for (int slot = 0; slot <= n; ++slot)
      acc += Poly::variable(n, slot) * Poly::variable(n, v.conj_slot(slot));
    return acc;
  }();

  OracleReport rep;
  rep.consistent = true;
  bool first = true;
  for (const Point& p : sphere_grid(n, resolution)) {
    rep.consistent = rep.consistent && s.evaluate(p) == GaussianRational(Rational(1));
    const GaussianRational val = f.evaluate(p);
    rep.consistent = rep.consistent && val.is_real();
    if (first || val.re < rep.minimum) {
      rep.minimum = val.re;
      rep.argmin = p;
    }
    first = false;
    ++rep.samples;
  }

  int deg = 0;
  if (is_homogeneous(f, deg)) {
    // scaling cross-check at the argmin: f(lambda Z) = lambda^deg f(Z)
    for (const Rational lam : {Rational(2), Rational(3), Rational(1, 2)}) {
      std::vector<GaussianRational> scaled;
      for (const auto& c : rep.argmin.coords) scaled.push_back(GaussianRational(lam) * c);
      Rational expect = rep.minimum;
      for (int i = 0; i < deg; ++i) expect *= lam;
      rep.consistent = rep.consistent &&
                       f.evaluate(Point(n, scaled)) == GaussianRational(expect);
    }
  }
  return rep;
}

Rational min_eig_lower(const GMatrix& a, const Rational& tol) {
  if (a.empty()) throw Error(Status::bad_argument, "empty matrix");
  return least_root_lower_bound(char_poly_real(a), tol);
}

OracleReport levi_min_oracle(const Poly& f, int resolution, const Rational& tol) {
  if (!f.is_real()) throw PreconditionError("Levi bounds need a real polynomial");
  if (sgn(tol) <= 0) throw Error(Status::bad_argument, "tolerance must be positive");
  OracleReport rep;
  rep.consistent = true;
  bool first = true;
  for (const Point& p : sphere_grid(f.n, resolution)) {
    const GMatrix a = levi_matrix(f, p);
    rep.consistent = rep.consistent && is_hermitian(a);
    const Rational lower = min_eig_lower(a, tol);
    if (first || lower < rep.minimum) {
      rep.minimum = lower;
      rep.argmin = p;
    }
    first = false;
    ++rep.samples;
  }
  return rep;
}

}  // namespace crgeo
