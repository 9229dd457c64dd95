#include "unipoly.hpp"

#include <algorithm>

namespace crgeo {

void UniPoly::normalize() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Rational(static_cast<long>(k)));
  d.normalize();
  return d;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.normalize();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  UniPoly r;
  r.c.assign(c.size() + o.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.normalize();
  return r;
}

UniPoly UniPoly::rem(const UniPoly& o) const {
  if (o.is_zero()) throw Error(Status::internal, "univariate division by zero");
  UniPoly r = *this;
  while (!r.is_zero() && r.degree() >= o.degree()) {
    Rational q = r.c.back() / o.c.back();
    int shift = r.degree() - o.degree();
    for (std::size_t i = 0; i < o.c.size(); ++i) {
      r.c[i + static_cast<std::size_t>(shift)] -= q * o.c[i];
    }
    r.c.pop_back();
    r.normalize();
  }
  return r;
}

namespace {

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

// Exact univariate quotient, used only when divisibility is guaranteed.
UniPoly uni_div_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r = a;
  q.c.assign(a.is_zero() ? 0 : static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    q.c[static_cast<std::size_t>(shift)] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      r.c[i + static_cast<std::size_t>(shift)] -= f * b.c[i];
    }
    r.normalize();
  }
  q.normalize();
  return q;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2].rem(chain.back());
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  UniPoly g = uni_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return uni_div_exact(p, g);
}

int descartes_sign_changes(const UniPoly& p) {
  int count = 0, prev = 0;
  for (const auto& x : p.c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sturm_count(const UniPoly& squarefree, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(squarefree);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rational least_root_lower_bound(const UniPoly& p, const Rational& tol) {
  if (p.is_zero()) throw Error(Status::internal, "least root of zero polynomial");
  UniPoly sf = squarefree_part(p);
  if (sf.degree() == 0) throw Error(Status::internal, "polynomial has no roots");
  // Cauchy bound: all roots lie in [-B, B].
  Rational B(1);
  for (const auto& x : sf.c) {
    Rational m = abs(x / sf.c.back());
    if (m > B) B = m;
  }
  B += 1;
  auto chain = sturm_chain(sf);
  int total = sign_variations_at(chain, -B) - sign_variations_at(chain, B);
  if (total == 0) throw Error(Status::internal, "polynomial has no real roots");
  // Shrink [lo, hi] keeping the least root inside (lo strictly below it).
  Rational lo = -B, hi = B;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int left = sign_variations_at(chain, lo) - sign_variations_at(chain, mid);
    if (left > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

}  // namespace crgeo
