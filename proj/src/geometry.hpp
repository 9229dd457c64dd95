#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace crgeo {

// Real-algebraic hypersurface { rho = 0 } in C^{n+1}, coordinates
// (z_1..z_n, w). Gradient components are cached in the order
// (rho_{z_1}, ..., rho_{z_n}, rho_w).
struct Hypersurface {
  Poly rho;
  int n = 0;
  std::vector<Poly> gradient;

  static Hypersurface from_poly(const Poly& rho);

  const Poly& rho_z(int k) const { return gradient[static_cast<std::size_t>(k) - 1]; }
  const Poly& rho_w() const { return gradient.back(); }
};

struct Signature {
  int plus = 0, minus = 0, zero = 0;
  bool operator==(const Signature& o) const {
    return plus == o.plus && minus == o.minus && zero == o.zero;
  }
  std::string str() const {
    return "(" + std::to_string(plus) + "," + std::to_string(minus) + "," + std::to_string(zero) + ")";
  }
};

enum class Orientation { as_given, flipped };

bool is_hermitian(const GMatrix& a);

// Exact inertia from the characteristic polynomial: zero count = order of
// vanishing at 0, positive count = Descartes sign changes (exact because the
// polynomial is real-rooted).
Signature hermitian_signature(const GMatrix& a);

// Complex Hessian d^2 f / dZ_a dZbar_b of any real f, evaluated at (p, pbar);
// (n+1) x (n+1), Hermitian.
GMatrix levi_matrix(const Poly& f, const Point& p);
GMatrix levi_matrix(const Hypersurface& m, const Point& p);

bool on_hypersurface(const Hypersurface& m, const Point& p);

// Nonvanishing of the real gradient; for real rho the antiholomorphic half is
// conjugate to the holomorphic half, so only rho_Z is tested.
bool is_smooth_at(const Hypersurface& m, const Point& p);

// Restriction of the Levi form to the complex tangent space at p, in the
// basis e_k - (rho_{Z_k}(p)/rho_{Z_j}(p)) e_j over k != j, where j is the
// least index with rho_{Z_j}(p) != 0.
GMatrix tangent_levi_form(const Hypersurface& m, const Point& p);

bool is_strictly_pseudoconvex_at(const Hypersurface& m, const Point& p,
                                 Orientation o = Orientation::as_given);

}  // namespace crgeo
