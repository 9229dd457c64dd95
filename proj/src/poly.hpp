#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace crgeo {

// Variable layout for a ring with n holomorphic coordinates z_1..z_n, w and
// formal conjugates. An exponent vector has length 2n+2 with slots
//   [ z_1 .. z_n , w , zbar_1 .. zbar_n , wbar ].
// The zbar/wbar slots double as the polarized variables (chi, tau): nothing in
// the ring ties them to actual conjugation; only evaluate() does.
struct VarTable {
  int n = 0;

  explicit VarTable(int nz) : n(nz) {}
  int slots() const { return 2 * n + 2; }
  int z(int k) const { return k - 1; }  // k in [1..n]
  int w() const { return n; }
  int zbar(int k) const { return n + k; }
  int wbar() const { return 2 * n + 1; }
  bool holomorphic(int slot) const { return slot <= n; }
  int conj_slot(int slot) const { return slot <= n ? slot + n + 1 : slot - (n + 1); }
  std::string slot_name(int slot) const;
};

using Exponents = std::vector<int32_t>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int32_t x : e) d += x;
  return d;
}

// Graded lexicographic: total degree first, then slot 0 most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

struct Point;

// Multivariate polynomial over Q(i) in the 2n+2 slot variables.
// Canonical form: no zero coefficients stored; equality is map equality.
struct Poly {
  int n = 0;
  std::map<Exponents, GaussianRational, GrlexLess> terms;

  Poly() = default;
  explicit Poly(int nz) : n(nz) {}

  static Poly constant(int n, GaussianRational c);
  static Poly variable(int n, int slot);

  VarTable vars() const { return VarTable(n); }
  bool is_zero() const { return terms.empty(); }
  int degree() const;            // total degree, -1 for the zero polynomial
  int low_degree() const;        // valuation at 0, -1 for the zero polynomial
  int degree_in(int slot) const;
  GaussianRational coeff(const Exponents& e) const;
  GaussianRational constant_term() const;

  void add_term(const Exponents& e, const GaussianRational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
  Poly scaled(const GaussianRational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return n == o.n && terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly conj_involution() const;  // z_k <-> zbar_k, w <-> wbar, coefficients conjugated
  bool is_real() const { return conj_involution() == *this; }

  Poly derivative(int slot) const;

  GaussianRational evaluate(const Point& p) const;
  GaussianRational evaluate_polarized(const Point& Z, const Point& Xi) const;

  // Substitutes `value` for the variable at `slot`; other slots untouched.
  Poly substitute(int slot, const Poly& value) const;

  // Simultaneous substitution: slot s receives values[s]. The values may live
  // in a ring with a different n; they must all share one.
  Poly substitute_all(const std::vector<Poly>& values) const;

  // Drops all terms of total degree > cap.
  Poly truncated(int cap) const;

  // f(Z + a): recentre so the new origin is the old point a.
  Poly shifted(const Point& a) const;

  std::string str() const;
};

// Evaluation point: values for (z_1..z_n, w). Conjugate slots always receive
// the exact complex conjugates.
struct Point {
  int n = 0;
  std::vector<GaussianRational> coords;

  Point() = default;
  Point(int nz, std::vector<GaussianRational> c) : n(nz), coords(std::move(c)) {}
  static Point origin(int n) { return Point(n, std::vector<GaussianRational>(n + 1)); }

  bool is_origin() const;
  Point conjugate() const;
  std::string str() const;
  bool operator==(const Point& o) const { return n == o.n && coords == o.coords; }
  bool operator<(const Point& o) const;
};

// Polynomial with rational coefficients in the 2n+2 real variables
// x_1..x_{n+1}, y_1..y_{n+1} (slot k = x_{k+1}, slot n+1+k = y_{k+1}).
// Carrier for realification certificates.
struct RealPoly {
  int n = 0;
  std::map<Exponents, Rational, GrlexLess> terms;

  explicit RealPoly(int nz = 0) : n(nz) {}
  bool is_zero() const { return terms.empty(); }
  void add_term(const Exponents& e, const Rational& c);
  // True iff every term has all-even exponents and a positive coefficient
  // (a visibly-nonnegative combination of squares of monomials).
  bool is_even_positive_combination() const;
  std::string str() const;
};

// Substitutes z_k = x_k + i y_k (and w likewise) and splits into exact real
// and imaginary parts.
std::pair<RealPoly, RealPoly> realify(const Poly& f);

}  // namespace crgeo
