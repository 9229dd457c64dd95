#include "linalg.hpp"

namespace crgeo {

GMatrix identity_matrix(int d) {
  GMatrix m(d, GRow(d));
  for (int i = 0; i < d; ++i) m[i][i] = GaussianRational(1);
  return m;
}

GMatrix mat_mul(const GMatrix& a, const GMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  GMatrix r(rows, GRow(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

GaussianRational mat_trace(const GMatrix& a) {
  GaussianRational t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

namespace {

void clear_row_denominators(GRow& row) {
  mpz_class l(1);
  for (const auto& x : row) {
    l = lcm(l, x.re.get_den());
    l = lcm(l, x.im.get_den());
  }
  if (l == 1) return;
  GaussianRational f = GaussianRational(Rational(l));
  for (auto& x : row) x *= f;
}

}  // namespace

int rank_exact(GMatrix m) {
  if (m.empty()) return 0;
  for (auto& row : m) clear_row_denominators(row);
  std::size_t rows = m.size(), cols = m[0].size();
  GaussianRational prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = GaussianRational();
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

UniPoly char_poly_real(const GMatrix& a) {
  int d = static_cast<int>(a.size());
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(d) + 1);
  coeffs[static_cast<std::size_t>(d)] = GaussianRational(1);
  GMatrix m = identity_matrix(d);
  for (int k = 1; k <= d; ++k) {
    m = mat_mul(a, m);
    GaussianRational c = mat_trace(m) / GaussianRational(-k);
    // p(x) = x^d + c_{d-1} x^{d-1} + ...; this step produces c_{d-k}.
    coeffs[static_cast<std::size_t>(d - k)] = c;
    for (int i = 0; i < d; ++i) m[i][i] += c;
  }
  UniPoly p;
  p.c.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i].im) != 0) {
      throw Error(Status::internal, "characteristic polynomial not real");
    }
    p.c[i] = coeffs[i].re;
  }
  p.normalize();
  return p;
}

std::optional<GRow> solve_linear(GMatrix a, GRow b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    GaussianRational inv = GaussianRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;  // inconsistent
  }
  GRow x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace crgeo
