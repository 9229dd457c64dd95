#include "geometry.hpp"

namespace crgeo {

Hypersurface Hypersurface::from_poly(const Poly& rho) {
  if (!rho.is_real()) {
    throw PreconditionError("defining polynomial is not real");
  }
  Hypersurface m;
  m.rho = rho;
  m.n = rho.n;
  VarTable v = rho.vars();
  for (int k = 1; k <= m.n; ++k) m.gradient.push_back(rho.derivative(v.z(k)));
  m.gradient.push_back(rho.derivative(v.w()));
  return m;
}

bool is_hermitian(const GMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != a[j][i].conj()) return false;
  return true;
}

Signature hermitian_signature(const GMatrix& a) {
  int d = static_cast<int>(a.size());
  if (!is_hermitian(a)) throw PreconditionError("matrix is not Hermitian");
  UniPoly p = char_poly_real(a);
  int zero = 0;
  while (zero < static_cast<int>(p.c.size()) && sgn(p.c[static_cast<std::size_t>(zero)]) == 0) {
    ++zero;
  }
  UniPoly q;
  q.c.assign(p.c.begin() + zero, p.c.end());
  int plus = descartes_sign_changes(q);
  return Signature{plus, d - zero - plus, zero};
}

GMatrix levi_matrix(const Poly& f, const Point& p) {
  VarTable v = f.vars();
  int d = f.n + 1;
  GMatrix h(d, GRow(d));
  for (int a = 0; a < d; ++a) {
    Poly fa = f.derivative(a);  // slots 0..n are the holomorphic block
    for (int b = 0; b < d; ++b) {
      h[a][b] = fa.derivative(v.conj_slot(b)).evaluate(p);
    }
  }
  return h;
}

GMatrix levi_matrix(const Hypersurface& m, const Point& p) {
  VarTable v = m.rho.vars();
  int d = m.n + 1;
  GMatrix h(d, GRow(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) h[a][b] = m.gradient[a].derivative(v.conj_slot(b)).evaluate(p);
  return h;
}

bool on_hypersurface(const Hypersurface& m, const Point& p) {
  return m.rho.evaluate(p).is_zero();
}

bool is_smooth_at(const Hypersurface& m, const Point& p) {
  if (!on_hypersurface(m, p)) throw PreconditionError("point is not on the hypersurface");
  for (const auto& g : m.gradient)
    if (!g.evaluate(p).is_zero()) return true;
  return false;
}

GMatrix tangent_levi_form(const Hypersurface& m, const Point& p) {
  int d = m.n + 1;
  GRow grad(d);
  int j = -1;
  for (int k = 0; k < d; ++k) {
    grad[k] = m.gradient[k].evaluate(p);
    if (j < 0 && !grad[k].is_zero()) j = k;
  }
  if (j < 0) throw PreconditionError("gradient vanishes: no tangent space at a non-smooth point");
  GMatrix h = levi_matrix(m, p);
  // Tangent basis v_k = e_k - (grad_k / grad_j) e_j for k != j.
  std::vector<int> idx;
  for (int k = 0; k < d; ++k)
    if (k != j) idx.push_back(k);
  GMatrix t(idx.size(), GRow(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    GaussianRational ca = grad[idx[a]] / grad[j];
    for (std::size_t b = 0; b < idx.size(); ++b) {
      GaussianRational cb = grad[idx[b]] / grad[j];
      // L(v_a, v_b) = H[ka][kb] - ca H[j][kb] - conj(cb) H[ka][j] + ca conj(cb) H[j][j]
      t[a][b] = h[idx[a]][idx[b]] - ca * h[j][idx[b]] - cb.conj() * h[idx[a]][j] +
                ca * cb.conj() * h[j][j];
    }
  }
  return t;
}

bool is_strictly_pseudoconvex_at(const Hypersurface& m, const Point& p, Orientation o) {
  Hypersurface mm = m;
  if (o == Orientation::flipped) mm = Hypersurface::from_poly(-m.rho);
  if (!is_smooth_at(mm, p)) throw PreconditionError("hypersurface is not smooth at the point");
  Signature s = hermitian_signature(tangent_levi_form(mm, p));
  return s == Signature{mm.n, 0, 0};
}

}  // namespace crgeo
