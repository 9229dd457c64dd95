#pragma once

#include <string>
#include <vector>

#include "crfields.hpp"

namespace crgeo {

// The quartic family  rho = -Im(w) + R*(sum|z_k|^2 + |w|^2)^2 + 2*sum Re(z_k zbar_k^3)
// on C^{n+1}. For R above the derived threshold the zero set is a compact
// smooth hypersurface, strictly pseudoconvex away from the origin, where the
// nondegeneracy order is 3.
struct FamilyParams {
  int n = 1;
  Rational R;
};

Poly family_s(int n);  // sum z_k chi_k + w tau (the polarized squared norm)
Poly make_PR(const FamilyParams& par);
Poly make_rho(const FamilyParams& par);

// max(2n, 3): above this both certificates below close.
Rational derived_R_threshold(int n);

// One verified claim; `witness` is the realified combination or the exact
// rational evidence the claim reduces to.
struct CertStep {
  std::string claim;
  std::string witness;
  bool checked = false;
};

struct Certificate {
  bool holds = true;
  std::vector<CertStep> steps;
  void add(std::string claim, std::string witness, bool ok) {
    steps.push_back({std::move(claim), std::move(witness), ok});
    holds = holds && ok;
  }
};

// min of P_R over the unit sphere s=1 is >= R - 2n, positive when R > 2n.
Certificate positivity_certificate(const FamilyParams& par);

// Levi form of P_R dominates (2R-6) s, positive off 0 when R > 3.
Certificate pseudoconvexity_certificate(const FamilyParams& par);

// rho(z, 0) >= (R-2) sigma^2: the surface meets {w = 0} only at the origin.
Certificate puncture_certificate(const FamilyParams& par);

struct CompactnessReport {
  bool compact = false;
  int degree = 0;
  Rational coefficient;  // largest c with top part >= c * s^(degree/2)
};

// The zero set is compact when the top homogeneous part dominates a positive
// multiple of a power of s (then rho -> +infinity along every ray). The
// domination is certified by an even-positive realified difference; the
// report carries the best such multiple.
CompactnessReport compactness_check(const Poly& rho);

struct SmoothnessReport {
  bool certified = false;
  Certificate chain;
  int samples_checked = 0;
};

// Gradient elimination: the factor identity confines critical points to
// z = 0, the z = 0 fiber yields an exact contradiction, and the origin has
// rho_w = i/2. Backed by >= min_samples explicit on-surface gradient checks.
SmoothnessReport smoothness_check(const FamilyParams& par, int min_samples, unsigned long seed);

// Exact rational points on the surface, canonicalized and deterministic for a
// given seed. May return fewer than `count` when the search grid is exhausted.
std::vector<Point> sample_points_on_M(const FamilyParams& par, int count, unsigned long seed);

struct TransformedSurface {
  Poly rho_hat;
  int clearing_degree = 0;  // total degree of the cleared factor (w wbar)^deg(rho)
};

// Image of the surface under (z, w) -> (z/w, 1/w), cleared of denominators:
// each term c z^a w^p zbar^b wbar^q becomes c z^a zbar^b w^(d-|a|-p) wbar^(d-|b|-q).
TransformedSurface transform_to_infinity(const Poly& rho);
Point transform_point(const Point& p);

}  // namespace crgeo
