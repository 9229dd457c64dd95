#include "family.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace crgeo {

namespace {

const GaussianRational kOne{Rational(1)};

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// 2 Re(z_k zbar_k^3) = z_k chi_k^3 + chi_k z_k^3
Poly cubic_term(int n, int k) {
  const VarTable v(n);
  const Poly z = Poly::variable(n, v.z(k));
  const Poly chi = Poly::variable(n, v.zbar(k));
  return z * chi.pow(3) + chi * z.pow(3);
}

// Real polynomial with only even exponents and positive coefficients, with a
// pure even power present for every listed real slot: a visibly positive
// definite expression on those coordinates.
bool definite_by_squares(const RealPoly& f, const std::vector<int>& required_slots) {
  if (!f.is_even_positive_combination()) return false;
  for (int slot : required_slots) {
    bool seen = false;
    for (const auto& term : f.terms) {
      const Exponents& e = term.first;
      bool pure = e[static_cast<std::size_t>(slot)] > 0;
      for (std::size_t s = 0; pure && s < e.size(); ++s)
        if (static_cast<int>(s) != slot && e[s] != 0) pure = false;
      if (pure) {
        seen = true;
        break;
      }
    }
    if (!seen) return false;
  }
  return true;
}

std::vector<int> all_real_slots(int n) {
  std::vector<int> out;
  for (int s = 0; s < 2 * n + 2; ++s) out.push_back(s);
  return out;
}

std::vector<int> z_real_slots(int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(k);          // x_{k+1}
    out.push_back(n + 1 + k);  // y_{k+1}
  }
  return out;
}

bool even_positive(const Poly& f) {
  auto [re, im] = realify(f);
  return im.is_zero() && re.is_even_positive_combination();
}

bool is_perfect_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace

Poly family_s(int n) {
  const VarTable v(n);
  Poly s(n);
  for (int k = 1; k <= n; ++k)
    s += Poly::variable(n, v.z(k)) * Poly::variable(n, v.zbar(k));
  s += Poly::variable(n, v.w()) * Poly::variable(n, v.wbar());
  return s;
}

Poly make_PR(const FamilyParams& par) {
  if (par.n < 1) throw Error(Status::bad_argument, "need at least one z variable");
  Poly p = family_s(par.n).pow(2).scaled(GaussianRational(par.R));
  for (int k = 1; k <= par.n; ++k) p += cubic_term(par.n, k);
  return p;
}

Poly make_rho(const FamilyParams& par) {
  if (par.n < 1) throw Error(Status::bad_argument, "need at least one z variable");
  const VarTable v(par.n);
  // -Im(w) = (i/2) w - (i/2) wbar
  Poly rho = Poly::variable(par.n, v.w()).scaled(GaussianRational(Rational(0), Rational(1, 2)));
  rho += Poly::variable(par.n, v.wbar()).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
  rho += make_PR(par);
  return rho;
}

Rational derived_R_threshold(int n) { return Rational(std::max(2 * n, 3)); }

Certificate positivity_certificate(const FamilyParams& par) {
  const int n = par.n;
  const VarTable v(n);
  const Poly s = family_s(n);
  Certificate cert;

  bool factor_ok = true;
  std::string factor_witness;
  for (int k = 1; k <= n; ++k) {
    const Poly zk = Poly::variable(n, v.z(k));
    const Poly chik = Poly::variable(n, v.zbar(k));
    const Poly m2 = zk * chik;  // |z_k|^2
    // |z_k|^4 + Re(z_k zbar_k^3) = |z_k|^2 (|z_k|^2 + Re(zbar_k^2))
    const Poly lhs = m2.pow(2) + cubic_term(n, k).scaled(GaussianRational(Rational(1, 2)));
    const Poly factor = m2 + (zk.pow(2) + chik.pow(2)).scaled(GaussianRational(Rational(1, 2)));
    factor_ok = factor_ok && lhs == m2 * factor && even_positive(factor) && even_positive(m2);
    if (k == 1) factor_witness = realify(factor).first.str();
  }
  cert.add("2 Re(z_k zbar_k^3) >= -2 |z_k|^4 pointwise",
           "|z_k|^2 + Re(zbar_k^2) realifies to " + factor_witness, factor_ok);

  bool sphere_ok = true;
  std::string sphere_witness;
  for (int k = 1; k <= n; ++k) {
    const Poly m2 = Poly::variable(n, v.z(k)) * Poly::variable(n, v.zbar(k));
    // s^2 - |z_k|^4 = (s - |z_k|^2)(s + |z_k|^2), both factors even-positive
    sphere_ok = sphere_ok && s.pow(2) - m2.pow(2) == (s - m2) * (s + m2) &&
                even_positive(s - m2) && even_positive(s + m2);
    if (k == 1) sphere_witness = realify(s - m2).first.str();
  }
  cert.add("|z_k|^4 <= s^2, so each cubic loss on s = 1 is at most 2",
           "s - |z_k|^2 realifies to " + sphere_witness, sphere_ok);

  const Rational bound = par.R - Rational(2 * n);
  cert.add("min of P_R over s = 1 is at least R - 2n", "R - 2n = " + rational_str(bound),
           factor_ok && sphere_ok);
  cert.add("R - 2n > 0", rational_str(bound) + " > 0", sgn(bound) > 0);
  return cert;
}

Certificate pseudoconvexity_certificate(const FamilyParams& par) {
  const int n = par.n;
  const VarTable v(n);
  const Poly s = family_s(n);
  Certificate cert;

  // complex Hessian of s^2: 2 s delta_ab + 2 Zbar_a Z_b (a rank-one PSD part)
  bool hessian_ok = true;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const Poly h = s.pow(2).derivative(a).derivative(v.conj_slot(b));
      Poly expect = Poly::variable(n, v.conj_slot(a)) * Poly::variable(n, b);
      expect = expect + expect;  // 2 Zbar_a Z_b
      if (a == b) expect += s + s;
      hessian_ok = hessian_ok && h == expect;
    }
  }
  cert.add("Hessian of s^2 is 2 s I + 2 (Zbar_a Z_b)",
           "v* (Zbar_a Z_b) v = |<Z, v>|^2 >= 0", hessian_ok);

  // cubic part: diagonal 3 (z_k^2 + zbar_k^2), nothing in the w row/column
  bool cubic_ok = true;
  Poly cubic(n);
  for (int k = 1; k <= n; ++k) cubic += cubic_term(n, k);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const Poly h = cubic.derivative(a).derivative(v.conj_slot(b));
      Poly expect(n);
      if (a == b && a < n)
        expect = (Poly::variable(n, a).pow(2) + Poly::variable(n, v.conj_slot(a)).pow(2))
                     .scaled(GaussianRational(Rational(3)));
      cubic_ok = cubic_ok && h == expect;
    }
  }
  cert.add("Hessian of the cubic sum is diag(3 (z_k^2 + zbar_k^2)), 0 in w", "", cubic_ok);

  bool bound_ok = true;
  std::string bound_witness;
  for (int k = 1; k <= n; ++k) {
    const Poly m2 = Poly::variable(n, v.z(k)) * Poly::variable(n, v.zbar(k));
    const Poly diag = (Poly::variable(n, v.z(k)).pow(2) + Poly::variable(n, v.zbar(k)).pow(2))
                          .scaled(GaussianRational(Rational(3)));
    const Poly six = m2.scaled(GaussianRational(Rational(6)));
    bound_ok = bound_ok && even_positive(six + diag) && even_positive(six - diag) &&
               even_positive(s - m2);
    if (k == 1)
      bound_witness = realify(six + diag).first.str() + " and " + realify(six - diag).first.str();
  }
  cert.add("|3 (z_k^2 + zbar_k^2)| <= 6 |z_k|^2 <= 6 s", "6|z_k|^2 +- 3(z_k^2+zbar_k^2) realify to " + bound_witness,
           bound_ok);

  const Rational margin = Rational(2) * par.R - Rational(6);
  cert.add("least eigenvalue of the Levi form of P_R is at least (2R-6) s",
           "2R - 6 = " + rational_str(margin), hessian_ok && cubic_ok && bound_ok);
  cert.add("2R - 6 > 0", rational_str(margin) + " > 0", sgn(margin) > 0);
  return cert;
}

Certificate puncture_certificate(const FamilyParams& par) {
  const int n = par.n;
  const VarTable v(n);
  Certificate cert;

  Poly sigma(n);  // sum |z_k|^2
  for (int k = 1; k <= n; ++k)
    sigma += Poly::variable(n, v.z(k)) * Poly::variable(n, v.zbar(k));

  Poly slice = make_rho(par).substitute(v.w(), Poly(n)).substitute(v.wbar(), Poly(n));
  Poly expect = sigma.pow(2).scaled(GaussianRational(par.R));
  for (int k = 1; k <= n; ++k) expect += cubic_term(n, k);
  cert.add("rho restricted to w = 0 is R sigma^2 + the cubic sum", "", slice == expect);

  const Rational margin = par.R - Rational(2);
  const Poly gap = slice - sigma.pow(2).scaled(GaussianRational(margin));
  auto [re, im] = realify(gap);
  cert.add("rho(z, 0) - (R-2) sigma^2 is an even-positive combination", re.str(),
           im.is_zero() && re.is_even_positive_combination());

  const bool definite = sgn(margin) > 0 &&
                        definite_by_squares(realify(sigma.pow(2)).first, z_real_slots(n));
  cert.add("(R-2) sigma^2 > 0 for z != 0", "R - 2 = " + rational_str(margin), definite);
  return cert;
}

CompactnessReport compactness_check(const Poly& rho) {
  CompactnessReport rep;
  if (rho.is_zero()) return rep;
  const int d = rho.degree();
  rep.degree = d;
  if (d <= 0 || d % 2 != 0) return rep;
  Poly top(rho.n);
  for (const auto& [e, c] : rho.terms)
    if (total_degree(e) == d) top.add_term(e, c);

  auto [tre, tim] = realify(top);
  if (!tim.is_zero()) return rep;
  const RealPoly sp = realify(family_s(rho.n).pow(static_cast<unsigned>(d / 2))).first;

  // largest c with  top - c s^(d/2)  an even-positive combination; its terms
  // are all even, so c is the worst coefficient ratio over the support of
  // s^(d/2)
  bool first = true;
  Rational c;
  for (const auto& term : sp.terms) {
    auto it = tre.terms.find(term.first);
    const Rational ratio =
        it == tre.terms.end() ? Rational(0) : Rational(it->second / term.second);
    if (first || ratio < c) c = ratio;
    first = false;
  }
  if (first || sgn(c) <= 0) return rep;

  RealPoly diff(tre.n);
  for (const auto& term : tre.terms) {
    Rational v = term.second;
    auto it = sp.terms.find(term.first);
    if (it != sp.terms.end()) v -= c * it->second;
    diff.add_term(term.first, v);
  }
  if (!diff.is_even_positive_combination()) return rep;

  rep.compact = true;
  rep.coefficient = c;
  return rep;
}

SmoothnessReport smoothness_check(const FamilyParams& par, int min_samples, unsigned long seed) {
  const int n = par.n;
  const VarTable v(n);
  const Hypersurface m = Hypersurface::from_poly(make_rho(par));
  const Poly s = family_s(n);
  SmoothnessReport rep;
  Certificate& cert = rep.chain;

  // rho_{z_k} = zbar_k (2 R s + zbar_k^2 + 3 z_k^2)
  bool factor_ok = true;
  bool definite_ok = true;
  std::string definite_witness;
  for (int k = 1; k <= n; ++k) {
    const Poly zk = Poly::variable(n, v.z(k));
    const Poly chik = Poly::variable(n, v.zbar(k));
    const Poly factor = s.scaled(GaussianRational(Rational(2) * par.R)) + chik.pow(2) +
                        zk.pow(2).scaled(GaussianRational(Rational(3)));
    factor_ok = factor_ok && m.rho_z(k) == chik * factor;
    // real part of the factor: definite on all real coordinates when R > 2
    const Poly repart = (factor + factor.conj_involution()).scaled(GaussianRational(Rational(1, 2)));
    auto [re, im] = realify(repart);
    definite_ok = definite_ok && im.is_zero() && definite_by_squares(re, all_real_slots(n));
    if (k == 1) definite_witness = re.str();
  }
  cert.add("rho_{z_k} factors as zbar_k (2 R s + zbar_k^2 + 3 z_k^2)", "", factor_ok);
  cert.add("Re(2 R s + zbar_k^2 + 3 z_k^2) is positive definite", definite_witness, definite_ok);
  cert.add("so grad_z rho = 0 forces z = 0 away from the origin", "", factor_ok && definite_ok);

  // z = 0 fiber: rho_w = 0 forces w = iv with v^3 = 1/(4R); rho = 0 forces
  // v = 0 or v^3 = 1/R. Both branches contradict.
  bool fiber_ok = false;
  std::string fiber_witness;
  if (sgn(par.R) > 0) {
    const Rational c1 = Rational(1) / (Rational(4) * par.R);
    const Rational c2 = Rational(1) / par.R;
    fiber_ok = c1 != c2 && sgn(c1) > 0;
    fiber_witness = "v^3 = " + rational_str(c1) + " from rho_w, v^3 = " + rational_str(c2) +
                    " or v = 0 from rho";
  }
  cert.add("on z = 0, rho_w = 0 and rho = 0 are incompatible", fiber_witness, fiber_ok);

  cert.add("rho_w at the origin", "i/2",
           m.rho_w().evaluate(Point::origin(n)) == GaussianRational(Rational(0), Rational(1, 2)));

  const std::vector<Point> pts = sample_points_on_M(par, min_samples, seed);
  int checked = 0;
  bool samples_ok = true;
  for (const Point& p : pts) {
    samples_ok = samples_ok && on_hypersurface(m, p) && is_smooth_at(m, p);
    ++checked;
  }
  rep.samples_checked = checked;
  cert.add("explicit gradient checks at sampled surface points",
           std::to_string(checked) + " points", samples_ok && checked >= min_samples);

  rep.certified = cert.holds;
  return rep;
}

std::vector<Point> sample_points_on_M(const FamilyParams& par, int count, unsigned long seed) {
  if (sgn(par.R) <= 0) throw PreconditionError("sampling needs R > 0");
  if (count < 0) throw Error(Status::bad_argument, "count must be nonnegative");
  const int n = par.n;
  const Hypersurface m = Hypersurface::from_poly(make_rho(par));

  // On the diagonal slice z_k = x_k (1+i) the cubic sum vanishes, so the
  // equation forces Im(w) = R r^2 on the sphere s = r and leaves
  //   Q(u, x) := u^2 + 2 sum x_k^2 = r - R^2 r^4 =: g(r).
  // One rational solution per radius seeds the rest: reflecting it through
  // rational directions D (the secant-line construction X - 2 B(X,D)/Q(D) D)
  // walks over the full rational point set of the quadric.
  using Vec = std::vector<Rational>;  // (u, x_1..x_n)
  const auto bform = [n](const Vec& a, const Vec& b) {
    Rational acc = a[0] * b[0];
    for (int k = 1; k <= n; ++k) acc += Rational(2) * a[static_cast<std::size_t>(k)] *
                                        b[static_cast<std::size_t>(k)];
    return acc;
  };

  std::vector<Rational> pool{Rational(0)};
  for (int c = 1; c <= 16; ++c) pool.push_back(frac(c, 64));
  for (int c = 1; c <= 8; ++c) pool.push_back(frac(c, 48));

  struct Seed {
    Rational g, v;
    Vec base;
  };
  std::vector<Seed> seeds;

  const auto find_base = [&](const Rational& g) -> std::optional<Vec> {
    Rational u;
    if (is_perfect_square(g, u)) {
      Vec base(static_cast<std::size_t>(n) + 1, Rational(0));
      base[0] = u;
      return base;
    }
    // one slot carrying a pool value is the only fallback worth scanning
    for (int k = 1; k <= n; ++k) {
      for (const Rational& x : pool) {
        const Rational rest = g - Rational(2) * x * x;
        if (sgn(rest) < 0 || !is_perfect_square(rest, u)) continue;
        Vec base(static_cast<std::size_t>(n) + 1, Rational(0));
        base[0] = u;
        base[static_cast<std::size_t>(k)] = x;
        return base;
      }
    }
    return std::nullopt;
  };

  for (int b = 1; b <= 40 && static_cast<int>(seeds.size()) < 8; ++b) {
    for (int a = 1; a <= 2 * b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational r = frac(a, b);
      const Rational g = r - par.R * par.R * r * r * r * r;
      if (sgn(g) < 0) continue;
      if (auto base = find_base(g)) seeds.push_back({g, par.R * r * r, std::move(*base)});
    }
  }
  if (seeds.empty()) return {};

  // deterministic direction stream: small integer vectors in expanding shells
  const auto directions = [n](int shell) {
    std::vector<Vec> out;
    std::vector<int> d(static_cast<std::size_t>(n) + 1, -shell);
    while (true) {
      int linf = 0;
      for (int c : d) linf = std::max(linf, std::abs(c));
      if (linf == shell) {
        Vec v;
        for (int c : d) v.emplace_back(c);
        out.push_back(std::move(v));
      }
      std::size_t i = 0;
      while (i < d.size() && d[i] == shell) d[i++] = -shell;
      if (i == d.size()) break;
      ++d[i];
    }
    return out;
  };

  std::set<Point> found;
  const int want = 3 * count + 8;
  for (int shell = 1; shell <= 24 && static_cast<int>(found.size()) < want; ++shell) {
    for (const Vec& dir : directions(shell)) {
      if (static_cast<int>(found.size()) >= want) break;
      for (const Seed& sd : seeds) {
        const Rational qd = bform(dir, dir);
        if (sgn(qd) == 0) continue;
        const Rational t = Rational(2) * bform(sd.base, dir) / qd;
        Vec pt = sd.base;
        for (std::size_t i = 0; i < pt.size(); ++i) pt[i] -= t * dir[i];
        // complex variants z_k = x_k (1 +- i) double the yield per solution
        for (int conj_mask = 0; conj_mask < (1 << n); ++conj_mask) {
          std::vector<GaussianRational> coords;
          for (int k = 1; k <= n; ++k) {
            const Rational& x = pt[static_cast<std::size_t>(k)];
            coords.emplace_back(x, (conj_mask >> (k - 1)) & 1 ? -x : x);
          }
          coords.emplace_back(pt[0], sd.v);
          Point p(n, std::move(coords));
          if (on_hypersurface(m, p)) found.insert(std::move(p));
        }
      }
    }
  }

  std::vector<Point> all(found.begin(), found.end());
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (static_cast<int>(all.size()) > count) all.resize(static_cast<std::size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

TransformedSurface transform_to_infinity(const Poly& rho) {
  if (rho.is_zero()) throw Error(Status::bad_argument, "cannot transform the zero polynomial");
  const VarTable v = rho.vars();
  const int d = rho.degree();
  TransformedSurface out;
  out.rho_hat = Poly(rho.n);
  out.clearing_degree = 2 * d;
  for (const auto& [e, c] : rho.terms) {
    int holo = 0, anti = 0;
    for (int s = 0; s <= v.n; ++s) holo += e[static_cast<std::size_t>(s)];
    for (int s = v.n + 1; s < v.slots(); ++s) anti += e[static_cast<std::size_t>(s)];
    Exponents f(e);
    f[static_cast<std::size_t>(v.w())] = d - holo;
    f[static_cast<std::size_t>(v.wbar())] = d - anti;
    out.rho_hat.add_term(f, c);
  }
  return out;
}

Point transform_point(const Point& p) {
  const GaussianRational w = p.coords.back();
  if (w.is_zero()) throw PreconditionError("the image of a point with w = 0 is at infinity");
  std::vector<GaussianRational> coords;
  for (int k = 0; k < p.n; ++k) coords.push_back(p.coords[static_cast<std::size_t>(k)] / w);
  coords.push_back(kOne / w);
  return Point(p.n, std::move(coords));
}

}  // namespace crgeo
