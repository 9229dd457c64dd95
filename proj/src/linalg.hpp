#pragma once

#include <optional>
#include <vector>

#include "gaussian.hpp"
#include "unipoly.hpp"

namespace crgeo {

using GRow = std::vector<GaussianRational>;
using GMatrix = std::vector<GRow>;

GMatrix identity_matrix(int d);
GMatrix mat_mul(const GMatrix& a, const GMatrix& b);
GaussianRational mat_trace(const GMatrix& a);

// Exact rank. Rows are scaled to Gaussian-integer entries first, then
// fraction-free (Bareiss) elimination — all intermediate divisions are exact.
int rank_exact(GMatrix m);

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier. The input must
// have a real characteristic polynomial (e.g. Hermitian); throws otherwise.
UniPoly char_poly_real(const GMatrix& a);

// One solution of A x = b if the system is consistent (free variables at 0).
std::optional<GRow> solve_linear(GMatrix a, GRow b);

}  // namespace crgeo
