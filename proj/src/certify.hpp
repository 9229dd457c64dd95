#pragma once

#include <utility>
#include <vector>

#include "geometry.hpp"

namespace crgeo {

// Rational points on the unit circle. Slopes t = k/m (m = resolution/4) sweep
// the closed first quadrant through (x, y) = ((1-t^2)/(1+t^2), 2t/(1+t^2));
// reflections fill the other quadrants. Exactly `resolution` points, and the
// grid for 2r contains the grid for r. Resolution must be a positive multiple
// of four.
std::vector<std::pair<Rational, Rational>> circle_grid(int resolution);

// Rational points on the unit sphere of C^{n+1}: amplitude vectors from
// iterated first-quadrant circle splittings, one full phase circle per
// coordinate. Deduplicated; every point has exact unit norm. Grids nest under
// resolution doubling.
std::vector<Point> sphere_grid(int n, int resolution);

// Evidence gathered by exhaustive exact evaluation over a sphere grid.
// `consistent` reports the oracle's own cross-checks (membership of every
// sample on the unit sphere, reality of every value, and a scaling identity
// when the input is homogeneous).
struct OracleReport {
  Rational minimum;
  Point argmin;
  int samples = 0;
  bool consistent = false;
};

// Minimum of a real polynomial over sphere_grid(n, resolution).
OracleReport sphere_min_oracle(const Poly& f, int resolution);

// Certified lower bound, within `tol`, for the least eigenvalue of the
// complex Hessian of f anywhere on the sphere grid. `minimum` underestimates
// the true grid minimum by less than `tol`.
OracleReport levi_min_oracle(const Poly& f, int resolution, const Rational& tol);

// Lower bound within `tol` for the least eigenvalue of one Hermitian matrix.
Rational min_eig_lower(const GMatrix& a, const Rational& tol);

}  // namespace crgeo
