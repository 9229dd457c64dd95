#pragma once

#include <map>
#include <vector>

#include "geometry.hpp"
#include "poly.hpp"

namespace crgeo {

// Variable-subset mask for jets; chi/tau are the zbar/wbar slots treated as
// free polarized variables.
namespace jetvars {
constexpr unsigned z = 1, w = 2, chi = 4, tau = 8;
constexpr unsigned holo = z | w;          // map-germ components
constexpr unsigned graph = z | chi | tau; // solved Q(z, chi, tau)
constexpr unsigned all = z | w | chi | tau;
}  // namespace jetvars

// Truncated polynomial: all terms of total degree > cap are dropped by every
// operation, and only slots allowed by the mask may appear.
struct Jet {
  int n = 0;
  int cap = 0;
  unsigned mask = jetvars::all;
  Poly body;

  static Jet make(Poly p, int cap, unsigned mask);

  Jet add(const Jet& o) const;
  Jet sub(const Jet& o) const;
  Jet mul(const Jet& o) const;
  Jet scaled(const GaussianRational& c) const;
  Jet derivative(int slot) const;
  Jet substitute(int slot, const Jet& value) const;
  // Multiplicative inverse; requires a nonzero constant term.
  Jet inverse() const;

  bool operator==(const Jet& o) const { return cap == o.cap && body == o.body; }
};

bool slot_allowed(const VarTable& v, unsigned mask, int slot);

// --- complex defining equation -------------------------------------------

// Solves rho(z, w, chi, tau) = 0 for w = Q(z, chi, tau) as a jet of degree D
// by Newton iteration. Requires rho(0) = 0 and rho_w(0) != 0.
Jet solve_graph(const Hypersurface& m, int D);

// Q(z, chi, Qbar(chi, z, w)) == w mod degree cap+1.
bool reality_check(const Jet& q);

// Graph jet of M at a point p on it, in coordinates adapted to p: first the
// recentring Z -> p + Z, then w -> w + b(z) with b(z) = Q(z,0,0) the value
// along the Segre variety of p. Afterwards Q(z,0,0) == 0 and, by the reality
// identity, Q(0,chi,0) == 0, so every chi-coefficient of Q(z,chi,0) vanishes
// at z = 0 and the essential type at p is well defined.
struct PointGerm {
  Jet q;       // adjusted graph jet
  Poly segre;  // b(z), in the recentred coordinates
};
PointGerm solve_graph_at(const Hypersurface& m, const Point& p, int D);

// chi-coefficient extraction of Q(z, chi, 0): multi-index I (length n) -> q_I(z).
using QCoeffs = std::map<Exponents, Poly>;
QCoeffs q_coefficients(const Jet& q);

// Q(z,0,tau) == tau == Q(0,chi,tau) at jet level.
bool is_normal_coordinates(const Jet& q);

// --- jet-level ideal codimension -----------------------------------------

struct CodimReport {
  std::vector<std::pair<int, int>> per_degree;  // (degree d, codimension at d)
  bool stabilized = false;
  int value = -1;  // stabilized codimension, if any
  int degree_cap = 0;
};

// dim of { polynomials of total degree <= d in the given slots } modulo the
// span of { m * g : g generator, m monomial, truncated at d }, for each d <= D;
// stabilization = three consecutive equal readings.
CodimReport ideal_codim(const std::vector<Poly>& gens, const std::vector<int>& slots, int n,
                        int D);

CodimReport esstype_jet(const QCoeffs& q, int n, int D);

// Holomorphic map germ (components in z, w only, vanishing at 0).
struct MapGerm {
  int n = 0;  // source z-count
  std::vector<Poly> components;

  static MapGerm make(std::vector<Poly> components);
};

CodimReport multiplicity_jet(const MapGerm& h, int D);

// A holomorphic map re-expressed as a germ at p in the adjusted coordinates
// of `source`: components h_j(p + Z) - h_j(p) with w replaced by w + b(z).
MapGerm map_germ_at(const std::vector<Poly>& h, const Point& p, const PointGerm& source);

// --- map identities and the multiplicity/type comparison -------------------

struct MapIdentityReport {
  bool holds = false;
  bool exact_polynomial = false;  // decided without truncation (see below)
  GaussianRational a0;            // constant term of the solved multiplier
};

// Decides solvability of  rho_target(H(Z), Hbar(Xi)) = a(Z,Xi) * rho_source
// with a an unknown polynomial. H supplies one Poly per target holomorphic
// coordinate (z'_1..z'_N, w'), in source variables.
//
// When rho_source vanishes at 0 this is a germ statement, solved mod degree
// D+1. When it does not (global surfaces like |z|^2+|w|^2-1), rho_source is a
// unit in the local ring and every truncated problem would be trivially
// solvable, so the exact polynomial identity is decided instead and D is
// ignored.
MapIdentityReport verify_map_identity(const Poly& rho_source, const Poly& rho_target,
                                      const std::vector<Poly>& h, int D);

struct PropReport {
  bool inclusion_holds = false;  // every source q_I lies in the ideal of {F_j(z,0)}
  CodimReport mult;
  CodimReport esstype;          // of the source
  CodimReport target_esstype;
  bool inequality_holds = false;  // mult <= esstype
  bool conclusive = false;        // both codimensions stabilized
};

PropReport check_prop_multid(const QCoeffs& source_q, int n_source, const MapGerm& h,
                             const QCoeffs& target_q, int n_target, int D);

// Smallest k with span{ d/dz of (d/dchi)^I Q at 0 : |I| <= k } = C^n, or -1
// if k_max is exceeded. Only meaningful in normal coordinates; the caller
// must assert that explicitly.
int q_based_nondeg_order(const Jet& q, int k_max, bool caller_asserts_normal);

}  // namespace crgeo
