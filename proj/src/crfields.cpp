#include "crfields.hpp"

#include "linalg.hpp"

namespace crgeo {

namespace {
const GaussianRational kOne{Rational(1)};
}

std::vector<RationalVectorField> cr_basis(const Hypersurface& m) {
  const VarTable v = m.rho.vars();
  const Poly d = m.rho.derivative(v.wbar());
  if (d.is_zero())
    throw PreconditionError("rho_wbar is identically zero; w is nowhere a graph direction");
  const bool constant_den = d.degree() == 0;
  std::vector<RationalVectorField> out;
  for (int j = 1; j <= m.n; ++j) {
    RationalVectorField field;
    field.n = m.n;
    field.numerators.assign(static_cast<std::size_t>(v.slots()), Poly(m.n));
    const Poly rzb = m.rho.derivative(v.zbar(j));
    if (constant_den) {
      field.denominator = Poly::constant(m.n, kOne);
      field.numerators[static_cast<std::size_t>(v.zbar(j))] = Poly::constant(m.n, kOne);
      field.numerators[static_cast<std::size_t>(v.wbar())] =
          rzb.scaled(-(kOne / d.constant_term()));
    } else {
      field.denominator = d;
      field.numerators[static_cast<std::size_t>(v.zbar(j))] = d;
      field.numerators[static_cast<std::size_t>(v.wbar())] = -rzb;
    }
    out.push_back(std::move(field));
  }
  return out;
}

RationalFunction cr_apply(const Hypersurface& m, int j, const RationalFunction& f) {
  if (j < 1 || j > m.n) throw Error(Status::bad_argument, "field index out of range");
  const VarTable v = m.rho.vars();
  const Poly d = m.rho.derivative(v.wbar());
  const Poly rzb = m.rho.derivative(v.zbar(j));
  const Poly& p = f.num;
  const GaussianRational mm{Rational(f.den_pow)};
  // L_j (p / d^m) = [ p_zbar d^2 - m p d_zbar d - rzb p_wbar d + m p rzb d_wbar ] / d^(m+2)
  Poly num = p.derivative(v.zbar(j)) * d * d;
  num -= (p * d.derivative(v.zbar(j)) * d).scaled(mm);
  num -= rzb * p.derivative(v.wbar()) * d;
  num += (p * rzb * d.derivative(v.wbar())).scaled(mm);
  return RationalFunction{std::move(num), f.den_pow + 2};
}

RationalFunction cr_apply_multi(const Hypersurface& m, const Exponents& i,
                                const RationalFunction& f) {
  if (static_cast<int>(i.size()) != m.n)
    throw Error(Status::bad_argument, "multi-index length must be n");
  RationalFunction acc = f;
  for (int j = 1; j <= m.n; ++j)
    for (int32_t rep = 0; rep < i[static_cast<std::size_t>(j - 1)]; ++rep)
      acc = cr_apply(m, j, acc);
  return acc;
}

GaussianRational rf_evaluate(const Hypersurface& m, const RationalFunction& f, const Point& p) {
  const VarTable v = m.rho.vars();
  const GaussianRational dv = m.rho.derivative(v.wbar()).evaluate(p);
  if (dv.is_zero() && f.den_pow > 0)
    throw PreconditionError("denominator rho_wbar vanishes at the evaluation point");
  GaussianRational den = kOne;
  for (int k = 0; k < f.den_pow; ++k) den = den * dv;
  return f.num.evaluate(p) / den;
}

NondegeneracyReport nondegeneracy_order(const Hypersurface& m, const Point& p, int k_max,
                                        bool reversed_composition) {
  if (k_max < 0) throw Error(Status::bad_argument, "k_max must be nonnegative");
  if (!on_hypersurface(m, p)) throw PreconditionError("base point is not on the hypersurface");
  const VarTable v = m.rho.vars();
  const int n = m.n;

  // Everything happens on jets recentred at p. After l <= k_max first-order
  // applications the reliable order is k_max - l >= 0, so every constant term
  // read below is exact.
  const Poly local = m.rho.shifted(p);
  const int cap = k_max;
  const auto jet_of = [&](const Poly& f) { return Jet::make(f.truncated(cap), cap, jetvars::all); };

  const Poly dpoly = local.derivative(v.wbar());
  if (dpoly.constant_term().is_zero())
    throw PreconditionError(
        "rho_wbar vanishes at the base point; reorder coordinates so w is a graph direction");
  const Jet dinv = jet_of(dpoly).inverse();
  std::vector<Jet> coeff;  // q_j multiplying -d/dwbar in L_j
  for (int j = 1; j <= n; ++j) coeff.push_back(jet_of(local.derivative(v.zbar(j))).mul(dinv));

  std::vector<Jet> grad;
  for (int k = 1; k <= n; ++k) grad.push_back(jet_of(local.derivative(v.z(k))));
  grad.push_back(jet_of(local.derivative(v.w())));

  const auto apply_field = [&](int j, const std::vector<Jet>& g) {
    std::vector<Jet> out;
    out.reserve(g.size());
    for (const Jet& comp : g)
      out.push_back(
          comp.derivative(v.zbar(j)).sub(coeff[static_cast<std::size_t>(j - 1)].mul(comp.derivative(v.wbar()))));
    return out;
  };

  struct Node {
    Exponents index;
    std::vector<Jet> jets;
  };
  std::vector<Node> frontier;
  frontier.push_back({Exponents(static_cast<std::size_t>(n), 0), grad});

  GMatrix rows;
  std::vector<Exponents> row_index;
  const auto push_row = [&](const Node& nd) {
    GRow r;
    for (const Jet& comp : nd.jets) r.push_back(comp.body.constant_term());
    rows.push_back(std::move(r));
    row_index.push_back(nd.index);
  };
  push_row(frontier.front());

  NondegeneracyReport rep;
  rep.k_max = k_max;
  int rank = rank_exact(rows);
  rep.ranks.emplace_back(0, rank);
  if (rank == n + 1) rep.order = 0;

  for (int level = 1; level <= k_max && rep.order < 0; ++level) {
    std::vector<Node> next;
    for (const Node& nd : frontier) {
      // each multi-index is generated once: extensions move only upward from
      // the largest used index (or downward from the smallest when reversed)
      int lo = 1, hi = n;
      if (!reversed_composition) {
        for (int j = n; j >= 1; --j)
          if (nd.index[static_cast<std::size_t>(j - 1)] > 0) {
            lo = j;
            break;
          }
      } else {
        for (int j = 1; j <= n; ++j)
          if (nd.index[static_cast<std::size_t>(j - 1)] > 0) {
            hi = j;
            break;
          }
      }
      for (int j = lo; j <= hi; ++j) {
        Node child;
        child.index = nd.index;
        child.index[static_cast<std::size_t>(j - 1)] += 1;
        child.jets = apply_field(j, nd.jets);
        push_row(child);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    rank = rank_exact(rows);
    rep.ranks.emplace_back(level, rank);
    if (rank == n + 1) rep.order = level;
  }

  if (rep.order >= 0) {
    GMatrix selected;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      GMatrix trial = selected;
      trial.push_back(rows[i]);
      if (rank_exact(trial) > static_cast<int>(selected.size())) {
        selected = std::move(trial);
        rep.witness.push_back(row_index[i]);
      }
      if (static_cast<int>(selected.size()) == n + 1) break;
    }
  }
  return rep;
}

}  // namespace crgeo
