#include "jets.hpp"

#include <algorithm>
#include <functional>

#include "linalg.hpp"

namespace crgeo {

namespace {
const GaussianRational kOne{Rational(1)};
}

bool slot_allowed(const VarTable& v, unsigned mask, int slot) {
  unsigned bit;
  if (slot < v.n)
    bit = jetvars::z;
  else if (slot == v.w())
    bit = jetvars::w;
  else if (slot < v.wbar())
    bit = jetvars::chi;
  else
    bit = jetvars::tau;
  return (mask & bit) != 0;
}

static void check_slots(const Poly& p, unsigned mask) {
  const VarTable v = p.vars();
  for (const auto& [e, c] : p.terms)
    for (int s = 0; s < v.slots(); ++s)
      if (e[s] != 0 && !slot_allowed(v, mask, s))
        throw Error(Status::internal,
                    "jet uses " + v.slot_name(s) + " outside its declared variable subset");
}

Jet Jet::make(Poly p, int cap, unsigned mask) {
  if (cap < 0) throw Error(Status::bad_argument, "jet cap must be nonnegative");
  Jet j;
  j.n = p.n;
  j.cap = cap;
  j.mask = mask;
  j.body = p.truncated(cap);
  check_slots(j.body, mask);
  return j;
}

static void check_compat(const Jet& a, const Jet& b) {
  if (a.n != b.n || a.cap != b.cap)
    throw Error(Status::internal, "jet arithmetic across different rings or caps");
}

Jet Jet::add(const Jet& o) const {
  check_compat(*this, o);
  Jet r = *this;
  r.mask |= o.mask;
  r.body += o.body;
  return r;
}

Jet Jet::sub(const Jet& o) const {
  check_compat(*this, o);
  Jet r = *this;
  r.mask |= o.mask;
  r.body -= o.body;
  return r;
}

Jet Jet::mul(const Jet& o) const {
  check_compat(*this, o);
  Jet r = *this;
  r.mask |= o.mask;
  r.body = (body * o.body).truncated(cap);
  return r;
}

Jet Jet::scaled(const GaussianRational& c) const {
  Jet r = *this;
  r.body = body.scaled(c);
  return r;
}

// Coefficients above cap-1 of the result are not trustworthy (the dropped
// tail of the operand would have contributed); callers only read low orders.
Jet Jet::derivative(int slot) const {
  Jet r = *this;
  r.body = body.derivative(slot);
  return r;
}

Jet Jet::substitute(int slot, const Jet& value) const {
  check_compat(*this, value);
  if (!value.body.constant_term().is_zero() && body.degree_in(slot) > 0)
    throw Error(Status::internal, "jet substitution requires a value vanishing at 0");
  Jet r = *this;
  r.mask |= value.mask;
  r.body = body.substitute(slot, value.body).truncated(cap);
  return r;
}

Jet Jet::inverse() const {
  const GaussianRational c0 = body.constant_term();
  if (c0.is_zero())
    throw PreconditionError("jet inverse requires a nonzero constant term");
  const GaussianRational ic0 = kOne / c0;
  // 1/f = (1/c0) * sum u^k with u = 1 - f/c0, u(0) = 0.
  const Poly u = Poly::constant(n, kOne) - body.scaled(ic0);
  Poly acc = Poly::constant(n, kOne);
  Poly upow = acc;
  for (int k = 1; k <= cap; ++k) {
    upow = (upow * u).truncated(cap);
    if (upow.is_zero()) break;
    acc += upow;
  }
  Jet r = *this;
  r.body = acc.scaled(ic0);
  return r;
}

Jet solve_graph(const Hypersurface& m, int D) {
  if (D < 1) throw Error(Status::bad_argument, "graph degree must be at least 1");
  const VarTable v = m.rho.vars();
  const Point o = Point::origin(m.n);
  if (!m.rho.evaluate(o).is_zero())
    throw PreconditionError("hypersurface does not pass through the origin");
  if (m.rho_w().evaluate(o).is_zero())
    throw PreconditionError("rho_w vanishes at the origin, so w is not a graph direction");

  // Newton iteration w <- w - rho/rho_w with w := Q(z, chi, tau); the order of
  // contact doubles each round, and the exact zero residual is the proof.
  Poly q(m.n);
  for (int iter = 0; iter < 64; ++iter) {
    const Poly res = m.rho.substitute(v.w(), q).truncated(D);
    if (res.is_zero()) return Jet::make(q, D, jetvars::graph);
    const Poly dres = m.rho_w().substitute(v.w(), q).truncated(D);
    const Jet inv = Jet::make(dres, D, jetvars::all).inverse();
    q = (q - (res * inv.body).truncated(D)).truncated(D);
  }
  throw Error(Status::internal, "graph solve did not converge");
}

bool reality_check(const Jet& q) {
  const VarTable v = q.body.vars();
  // Qbar(chi, z, w), then plug it into Q's tau slot; the composite must be w.
  const Poly inner = q.body.conj_involution();
  const Poly composed = q.body.substitute(v.wbar(), inner).truncated(q.cap);
  return composed == Poly::variable(q.n, v.w());
}

PointGerm solve_graph_at(const Hypersurface& m, const Point& p, int D) {
  const Hypersurface centred = Hypersurface::from_poly(m.rho.shifted(p));
  const Jet q = solve_graph(centred, D);
  // The normalization below leans on the reality identity; refuse early if
  // the solved graph does not satisfy it.
  if (!reality_check(q))
    throw Error(Status::internal, "solved graph at the base point violates reality");
  const VarTable v = q.body.vars();
  Poly b = q.body;
  for (int k = 1; k <= q.n; ++k) b = b.substitute(v.zbar(k), Poly(q.n));
  b = b.substitute(v.wbar(), Poly(q.n));
  // Q'(z, chi, tau) = Q(z, chi, tau + bbar(chi)) - b(z)
  const Poly tau_shift = Poly::variable(q.n, v.wbar()) + b.conj_involution();
  const Poly adjusted = q.body.substitute(v.wbar(), tau_shift).truncated(D) - b;
  return {Jet::make(adjusted, D, jetvars::graph), b};
}

QCoeffs q_coefficients(const Jet& q) {
  const VarTable v = q.body.vars();
  const Poly at_tau0 = q.body.substitute(v.wbar(), Poly(q.n));
  QCoeffs out;
  for (const auto& [e, c] : at_tau0.terms) {
    Exponents chi_part(e.begin() + v.n + 1, e.begin() + 2 * v.n + 1);
    Exponents z_part(static_cast<std::size_t>(v.slots()), 0);
    for (int k = 0; k < v.n; ++k) z_part[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
    auto it = out.find(chi_part);
    if (it == out.end()) it = out.emplace(chi_part, Poly(q.n)).first;
    it->second.add_term(z_part, c);
  }
  return out;
}

bool is_normal_coordinates(const Jet& q) {
  const VarTable v = q.body.vars();
  const Poly tau = Poly::variable(q.n, v.wbar());
  Poly chi0 = q.body;
  for (int k = 1; k <= q.n; ++k) chi0 = chi0.substitute(v.zbar(k), Poly(q.n));
  Poly z0 = q.body;
  for (int k = 1; k <= q.n; ++k) z0 = z0.substitute(v.z(k), Poly(q.n));
  return chi0 == tau && z0 == tau;
}

// --- jet-level ideal codimension -----------------------------------------

static std::vector<Exponents> monomials_up_to(const VarTable& v, const std::vector<int>& slots,
                                              int dmax) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(v.slots()), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
    if (idx == slots.size()) {
      out.push_back(e);
      return;
    }
    for (int t = 0; t <= rem; ++t) {
      e[static_cast<std::size_t>(slots[idx])] = t;
      rec(idx + 1, rem - t);
    }
    e[static_cast<std::size_t>(slots[idx])] = 0;
  };
  if (dmax >= 0) rec(0, dmax);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

static GRow row_from_poly(const Poly& p, const std::map<Exponents, int, GrlexLess>& colidx) {
  GRow row(colidx.size());
  for (const auto& [e, c] : p.terms) row[static_cast<std::size_t>(colidx.at(e))] = c;
  return row;
}

CodimReport ideal_codim(const std::vector<Poly>& gens, const std::vector<int>& slots, int n,
                        int D) {
  if (D < 0) throw Error(Status::bad_argument, "degree cap must be nonnegative");
  const VarTable v(n);
  for (const Poly& g : gens) {
    if (g.n != n) throw Error(Status::internal, "generator lives in the wrong ring");
    for (const auto& [e, c] : g.terms)
      for (int s = 0; s < v.slots(); ++s)
        if (e[static_cast<std::size_t>(s)] != 0 &&
            std::find(slots.begin(), slots.end(), s) == slots.end())
          throw PreconditionError("generator uses a variable outside the quotient ring");
  }

  CodimReport rep;
  rep.degree_cap = D;
  for (int d = 0; d <= D; ++d) {
    const std::vector<Exponents> cols = monomials_up_to(v, slots, d);
    std::map<Exponents, int, GrlexLess> colidx;
    for (std::size_t i = 0; i < cols.size(); ++i) colidx.emplace(cols[i], static_cast<int>(i));
    GMatrix rows;
    for (const Poly& g : gens) {
      if (g.is_zero()) continue;
      const int l = g.low_degree();
      if (l > d) continue;
      for (const Exponents& me : monomials_up_to(v, slots, d - l)) {
        Poly mu(n);
        mu.add_term(me, kOne);
        const Poly prod = (mu * g).truncated(d);
        if (prod.is_zero()) continue;
        rows.push_back(row_from_poly(prod, colidx));
      }
    }
    const int r = rows.empty() ? 0 : rank_exact(rows);
    rep.per_degree.emplace_back(d, static_cast<int>(cols.size()) - r);
  }

  // A plateau of three is only trusted when nothing after it moves again.
  for (std::size_t i = 2; i < rep.per_degree.size(); ++i) {
    const int c = rep.per_degree[i].second;
    if (rep.per_degree[i - 1].second != c || rep.per_degree[i - 2].second != c) continue;
    bool settled = true;
    for (std::size_t j = i + 1; j < rep.per_degree.size(); ++j)
      if (rep.per_degree[j].second != c) {
        settled = false;
        break;
      }
    if (settled) {
      rep.stabilized = true;
      rep.value = c;
      break;
    }
  }
  return rep;
}

CodimReport esstype_jet(const QCoeffs& q, int n, int D) {
  std::vector<Poly> gens;
  for (const auto& [I, p] : q)
    if (!p.is_zero()) gens.push_back(p);
  std::vector<int> slots;
  for (int s = 0; s < n; ++s) slots.push_back(s);
  return ideal_codim(gens, slots, n, D);
}

MapGerm MapGerm::make(std::vector<Poly> components) {
  if (components.empty()) throw Error(Status::bad_argument, "map germ needs components");
  MapGerm g;
  g.n = components[0].n;
  const VarTable v(g.n);
  for (const Poly& c : components) {
    if (c.n != g.n) throw Error(Status::internal, "map components in different source rings");
    if (!c.constant_term().is_zero()) throw PreconditionError("map germ must fix the origin");
    for (const auto& [e, co] : c.terms)
      for (int s = v.n + 1; s < v.slots(); ++s)
        if (e[static_cast<std::size_t>(s)] != 0)
          throw PreconditionError("map germ components must be holomorphic");
  }
  g.components = std::move(components);
  return g;
}

CodimReport multiplicity_jet(const MapGerm& h, int D) {
  std::vector<int> slots;
  for (int s = 0; s <= h.n; ++s) slots.push_back(s);
  return ideal_codim(h.components, slots, h.n, D);
}

MapGerm map_germ_at(const std::vector<Poly>& h, const Point& p, const PointGerm& source) {
  const int n = source.q.n;
  const VarTable v(n);
  const Poly w_shift = Poly::variable(n, v.w()) + source.segre;
  std::vector<Poly> out;
  for (const Poly& comp : h) {
    const Poly centred = comp.shifted(p) - Poly::constant(n, comp.evaluate(p));
    out.push_back(centred.substitute(v.w(), w_shift));
  }
  return MapGerm::make(std::move(out));
}

// --- map identities --------------------------------------------------------

MapIdentityReport verify_map_identity(const Poly& rho_source, const Poly& rho_target,
                                      const std::vector<Poly>& h, int D) {
  const int n = rho_source.n;
  const int N = static_cast<int>(h.size()) - 1;
  if (N < 0 || rho_target.n != N)
    throw Error(Status::bad_argument, "component count does not match the target ring");
  if (rho_source.is_zero())
    throw Error(Status::bad_argument, "source defining polynomial is zero");
  const VarTable vs(n), vt(N);
  for (const Poly& c : h) {
    if (c.n != n) throw Error(Status::bad_argument, "map components must live in the source ring");
    for (const auto& [e, co] : c.terms)
      for (int s = n + 1; s < vs.slots(); ++s)
        if (e[static_cast<std::size_t>(s)] != 0)
          throw PreconditionError("map components must be holomorphic");
  }

  std::vector<Poly> values(static_cast<std::size_t>(vt.slots()), Poly(n));
  for (int j = 0; j <= N; ++j) {
    values[static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(j)];
    values[static_cast<std::size_t>(vt.n + 1 + j)] = h[static_cast<std::size_t>(j)].conj_involution();
  }
  const Poly composed_full = rho_target.substitute_all(values);

  MapIdentityReport rep;
  const bool germ_mode = rho_source.constant_term().is_zero();
  Poly composed;
  int da;  // degree bound for the multiplier
  if (germ_mode) {
    if (D < 0) throw Error(Status::bad_argument, "germ comparison needs a degree cap");
    composed = composed_full.truncated(D);
    // higher multiplier monomials cannot reach degree <= D once multiplied
    da = D - rho_source.low_degree();
  } else {
    // rho_source(0) != 0 makes it a unit in the local ring: decide the exact
    // identity. Total degree is additive over products, so the bound is sharp.
    rep.exact_polynomial = true;
    composed = composed_full;
    da = composed.is_zero() ? 0 : composed.degree() - rho_source.degree();
    if (da < 0) {
      rep.holds = false;
      return rep;
    }
  }
  const auto trunc = [&](const Poly& p) { return germ_mode ? p.truncated(D) : p; };

  std::vector<int> all_slots;
  for (int s = 0; s < vs.slots(); ++s) all_slots.push_back(s);
  const std::vector<Exponents> amons = monomials_up_to(vs, all_slots, da);

  std::map<Exponents, int, GrlexLess> rowidx;
  const auto touch = [&](const Poly& p) {
    for (const auto& [e, c] : p.terms) rowidx.emplace(e, 0);
  };
  touch(composed);
  std::vector<Poly> colpolys;
  colpolys.reserve(amons.size());
  for (const Exponents& me : amons) {
    Poly mu(n);
    mu.add_term(me, kOne);
    const Poly prod = trunc(mu * rho_source);
    colpolys.push_back(prod);
    touch(prod);
  }
  int next = 0;
  for (auto& [e, idx] : rowidx) idx = next++;

  if (rowidx.empty()) {  // nothing survives truncation on either side
    rep.holds = true;
    return rep;
  }
  GMatrix a(rowidx.size(), GRow(colpolys.size()));
  for (std::size_t c = 0; c < colpolys.size(); ++c)
    for (const auto& [e, co] : colpolys[c].terms)
      a[static_cast<std::size_t>(rowidx.at(e))][c] = co;
  GRow b(rowidx.size());
  for (const auto& [e, co] : composed.terms) b[static_cast<std::size_t>(rowidx.at(e))] = co;

  const auto sol = solve_linear(a, b);
  rep.holds = sol.has_value();
  if (sol) {
    const Exponents zero(static_cast<std::size_t>(vs.slots()), 0);
    for (std::size_t c = 0; c < amons.size(); ++c)
      if (amons[c] == zero) rep.a0 = (*sol)[c];
  }
  return rep;
}

PropReport check_prop_multid(const QCoeffs& source_q, int n_source, const MapGerm& h,
                             const QCoeffs& target_q, int n_target, int D) {
  if (h.n != n_source)
    throw Error(Status::bad_argument, "map germ does not live on the source");
  if (static_cast<int>(h.components.size()) != n_target + 1)
    throw Error(Status::bad_argument, "map germ target dimension mismatch");
  const VarTable v(n_source);

  // z'-components along w = 0 generate the comparison ideal.
  std::vector<Poly> f;
  for (int j = 0; j < n_target; ++j) {
    Poly fj = h.components[static_cast<std::size_t>(j)].substitute(v.w(), Poly(n_source));
    if (!fj.is_zero()) f.push_back(fj);
  }
  std::vector<int> zslots;
  for (int s = 0; s < n_source; ++s) zslots.push_back(s);

  const std::vector<Exponents> cols = monomials_up_to(v, zslots, D);
  std::map<Exponents, int, GrlexLess> colidx;
  for (std::size_t i = 0; i < cols.size(); ++i) colidx.emplace(cols[i], static_cast<int>(i));
  GMatrix rows;
  for (const Poly& fj : f) {
    const int l = fj.low_degree();
    if (l > D) continue;
    for (const Exponents& me : monomials_up_to(v, zslots, D - l)) {
      Poly mu(n_source);
      mu.add_term(me, kOne);
      const Poly prod = (mu * fj).truncated(D);
      if (!prod.is_zero()) rows.push_back(row_from_poly(prod, colidx));
    }
  }
  const int base = rows.empty() ? 0 : rank_exact(rows);

  PropReport rep;
  rep.inclusion_holds = true;
  for (const auto& [I, qi] : source_q) {
    const Poly qt = qi.truncated(D);
    if (qt.is_zero()) continue;  // vanishes past the cap: member modulo degree D+1
    GMatrix aug = rows;
    aug.push_back(row_from_poly(qt, colidx));
    if (rank_exact(aug) != base) {
      rep.inclusion_holds = false;
      break;
    }
  }

  rep.mult = multiplicity_jet(h, D);
  rep.esstype = esstype_jet(source_q, n_source, D);
  rep.target_esstype = esstype_jet(target_q, n_target, D);
  rep.conclusive = rep.mult.stabilized && rep.esstype.stabilized;
  rep.inequality_holds = rep.conclusive && rep.mult.value <= rep.esstype.value;
  return rep;
}

int q_based_nondeg_order(const Jet& q, int k_max, bool caller_asserts_normal) {
  if (!caller_asserts_normal)
    throw PreconditionError(
        "the coefficient-gradient criterion is only valid in normal coordinates; "
        "the caller must assert that explicitly");
  if (k_max < 0) throw Error(Status::bad_argument, "k_max must be nonnegative");
  const int n = q.n;
  const VarTable v(n);
  const QCoeffs qc = q_coefficients(q);
  GMatrix rows;
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& [I, qi] : qc) {
      if (total_degree(I) != k) continue;
      GRow row(static_cast<std::size_t>(n));
      bool nonzero = false;
      for (int j = 1; j <= n; ++j) {
        Exponents e(static_cast<std::size_t>(v.slots()), 0);
        e[static_cast<std::size_t>(v.z(j))] = 1;
        row[static_cast<std::size_t>(j - 1)] = qi.coeff(e);
        nonzero = nonzero || !row[static_cast<std::size_t>(j - 1)].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
    if (!rows.empty() && rank_exact(rows) == n) return k;
  }
  return -1;
}

}  // namespace crgeo
