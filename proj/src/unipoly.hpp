#pragma once

#include <vector>

#include "gaussian.hpp"

namespace crgeo {

// Univariate polynomial over Q, coefficient of x^k at c[k]. Normalized: no
// trailing zero coefficients (zero polynomial = empty vector).
struct UniPoly {
  std::vector<Rational> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  // Euclidean remainder (requires o nonzero).
  UniPoly rem(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return c == o.c; }
};

// gcd(p, p') division-free content: returns p with repeated roots stripped.
UniPoly squarefree_part(const UniPoly& p);

// Number of sign changes in the coefficient sequence (zero coefficients
// skipped) — equals the number of positive roots (with multiplicity) for
// real-rooted polynomials.
int descartes_sign_changes(const UniPoly& p);

// Number of distinct real roots of squarefree p in the half-open interval
// (a, b], via a Sturm chain.
int sturm_count(const UniPoly& squarefree, const Rational& a, const Rational& b);

// An exact lower bound for the least real root of p (p must have at least one
// real root and be nonzero); the bound is sharpened by bisection until the
// isolating interval has width <= tol.
Rational least_root_lower_bound(const UniPoly& p, const Rational& tol);

}  // namespace crgeo
