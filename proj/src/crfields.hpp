#pragma once

#include <vector>

#include "geometry.hpp"
#include "jets.hpp"

namespace crgeo {

// Antiholomorphic tangential field L_j = d/dzbar_j - (rho_zbar_j / rho_wbar) d/dwbar
// written over the common denominator rho_wbar; a nonzero constant denominator
// is folded into the numerators.
struct RationalVectorField {
  int n = 0;
  std::vector<Poly> numerators;  // indexed by slot
  Poly denominator;
};

// The basis L_1..L_n; requires rho_wbar not identically zero. L_j rho = 0 as
// a rational identity wherever rho_wbar does not vanish.
std::vector<RationalVectorField> cr_basis(const Hypersurface& m);

// Rational function num / rho_wbar^den_pow relative to the surface.
struct RationalFunction {
  Poly num;
  int den_pow = 0;
};

// L_j f, symbolically. Quotient-rule over the common denominator: the power
// rises by exactly 2 and no cancellation is attempted.
RationalFunction cr_apply(const Hypersurface& m, int j, const RationalFunction& f);

// L_n^{i_n} ... L_1^{i_1} f  (L_1 acts first in composition time).
RationalFunction cr_apply_multi(const Hypersurface& m, const Exponents& i,
                                const RationalFunction& f);

GaussianRational rf_evaluate(const Hypersurface& m, const RationalFunction& f, const Point& p);

struct NondegeneracyReport {
  int order = -1;  // smallest k with a full span, or -1 if k_max is exceeded
  int k_max = 0;
  std::vector<std::pair<int, int>> ranks;  // (level k, rank of span over |I| <= k)
  std::vector<Exponents> witness;          // multi-indices of a spanning set
};

// Smallest k such that { L^I (rho_{z_1},..,rho_{z_n},rho_w)(p) : |I| <= k }
// spans C^{n+1}. Computed on jets recentred at p (cap k_max keeps every
// evaluated constant term exact). `reversed_composition` applies L_n first
// instead of L_1; the resulting order is the same and tests exercise that.
NondegeneracyReport nondegeneracy_order(const Hypersurface& m, const Point& p, int k_max,
                                        bool reversed_composition = false);

}  // namespace crgeo
