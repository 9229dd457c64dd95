#include "poly.hpp"

#include <algorithm>

namespace crgeo {

std::string VarTable::slot_name(int slot) const {
  if (slot == w()) return "w";
  if (slot == wbar()) return "conj(w)";
  if (slot < n) return "z" + std::to_string(slot + 1);
  return "conj(z" + std::to_string(slot - n) + ")";
}

Poly Poly::constant(int n, GaussianRational c) {
  Poly p(n);
  if (!c.is_zero()) p.terms.emplace(Exponents(2 * n + 2, 0), std::move(c));
  return p;
}

Poly Poly::variable(int n, int slot) {
  Poly p(n);
  Exponents e(2 * n + 2, 0);
  e[slot] = 1;
  p.terms.emplace(std::move(e), GaussianRational(1));
  return p;
}

int Poly::degree() const {
  if (terms.empty()) return -1;
  return total_degree(terms.rbegin()->first);
}

int Poly::low_degree() const {
  if (terms.empty()) return -1;
  return total_degree(terms.begin()->first);
}

int Poly::degree_in(int slot) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e[slot]));
  return d;
}

GaussianRational Poly::coeff(const Exponents& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? GaussianRational() : it->second;
}

GaussianRational Poly::constant_term() const { return coeff(Exponents(2 * n + 2, 0)); }

void Poly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(n);
  for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(n);
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : o.terms) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  Poly r(n);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(n, GaussianRational(1));
  Poly b = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * b;
    b = b * b;
    e >>= 1u;
  }
  return acc;
}

Poly Poly::conj_involution() const {
  VarTable v = vars();
  Poly r(n);
  for (const auto& [e, c] : terms) {
    Exponents f(e.size());
    for (int s = 0; s < static_cast<int>(e.size()); ++s) f[v.conj_slot(s)] = e[s];
    r.terms.emplace(std::move(f), c.conj());
  }
  return r;
}

Poly Poly::derivative(int slot) const {
  Poly r(n);
  for (const auto& [e, c] : terms) {
    if (e[slot] == 0) continue;
    Exponents f(e);
    f[slot] -= 1;
    r.add_term(f, c * GaussianRational(e[slot]));
  }
  return r;
}

namespace {

GaussianRational slot_value(const VarTable& v, const Point& Z, const Point& Xi, int slot) {
  if (v.holomorphic(slot)) return Z.coords[slot];
  return Xi.coords[slot - (v.n + 1)];
}

}  // namespace

GaussianRational Poly::evaluate(const Point& p) const { return evaluate_polarized(p, p.conjugate()); }

GaussianRational Poly::evaluate_polarized(const Point& Z, const Point& Xi) const {
  VarTable v = vars();
  GaussianRational sum;
  for (const auto& [e, c] : terms) {
    GaussianRational t = c;
    for (int s = 0; s < static_cast<int>(e.size()); ++s) {
      if (e[s] == 0) continue;
      t *= gpow(slot_value(v, Z, Xi, s), static_cast<unsigned>(e[s]));
    }
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(int slot, const Poly& value) const {
  Poly r(n);
  std::map<int, Poly> powers;
  powers[0] = Poly::constant(n, GaussianRational(1));
  for (const auto& [e, c] : terms) {
    int k = e[slot];
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(static_cast<unsigned>(k))).first;
    Exponents base(e);
    base[slot] = 0;
    Poly mono(n);
    mono.terms.emplace(std::move(base), c);
    r += mono * it->second;
  }
  return r;
}

Poly Poly::substitute_all(const std::vector<Poly>& values) const {
  int out_n = values.empty() ? n : values[0].n;
  Poly r(out_n);
  std::vector<std::map<int, Poly>> powers(values.size());
  for (const auto& [e, c] : terms) {
    Poly t = Poly::constant(out_n, c);
    for (std::size_t s = 0; s < values.size(); ++s) {
      int k = e[s];
      if (k == 0) continue;
      auto it = powers[s].find(k);
      if (it == powers[s].end()) {
        it = powers[s].emplace(k, values[s].pow(static_cast<unsigned>(k))).first;
      }
      t = t * it->second;
    }
    r += t;
  }
  return r;
}

Poly Poly::truncated(int cap) const {
  Poly r(n);
  for (const auto& [e, c] : terms) {
    if (total_degree(e) <= cap) r.terms.emplace(e, c);
  }
  return r;
}

Poly Poly::shifted(const Point& a) const {
  VarTable v = vars();
  Poly r = *this;
  for (int s = 0; s < v.slots(); ++s) {
    GaussianRational c =
        v.holomorphic(s) ? a.coords[s] : a.coords[s - (n + 1)].conj();
    if (c.is_zero()) continue;
    r = r.substitute(s, Poly::variable(n, s) + Poly::constant(n, c));
  }
  return r;
}

namespace {

// One printed term; the caller joins with +/-.
std::string term_str(const VarTable& v, const Exponents& e, const GaussianRational& c) {
  std::string mono;
  for (int s = 0; s < static_cast<int>(e.size()); ++s) {
    if (e[s] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += v.slot_name(s);
    if (e[s] > 1) mono += "^" + std::to_string(e[s]);
  }
  std::string cs;
  bool mixed = sgn(c.re) != 0 && sgn(c.im) != 0;
  if (mixed) {
    cs = "(" + c.str() + ")";
  } else if (c.is_real()) {
    if (c.re == 1 && !mono.empty()) {
      cs = "";
    } else if (c.re == -1 && !mono.empty()) {
      cs = "-";
    } else {
      cs = c.str();
    }
  } else {
    cs = c.str();  // "i", "-i", or "p/q*i"
  }
  if (mono.empty()) return cs.empty() ? "1" : (cs == "-" ? "-1" : cs);
  if (cs.empty() || cs == "-") return cs + mono;
  return cs + "*" + mono;
}

}  // namespace

std::string Poly::str() const {
  if (terms.empty()) return "0";
  VarTable v = vars();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string t = term_str(v, it->first, it->second);
    if (out.empty()) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

bool Point::is_origin() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

Point Point::conjugate() const {
  Point p(n, coords);
  for (auto& c : p.coords) c = c.conj();
  return p;
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].str();
  }
  return out + ")";
}

bool Point::operator<(const Point& o) const {
  for (std::size_t i = 0; i < coords.size() && i < o.coords.size(); ++i) {
    if (coords[i].re != o.coords[i].re) return coords[i].re < o.coords[i].re;
    if (coords[i].im != o.coords[i].im) return coords[i].im < o.coords[i].im;
  }
  return coords.size() < o.coords.size();
}

void RealPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

bool RealPoly::is_even_positive_combination() const {
  for (const auto& [e, c] : terms) {
    if (sgn(c) <= 0) return false;
    for (int32_t x : e)
      if (x % 2 != 0) return false;
  }
  return true;
}

std::string RealPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string mono;
    for (int s = 0; s < static_cast<int>(it->first.size()); ++s) {
      if (it->first[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (s <= n ? "x" + std::to_string(s + 1) : "y" + std::to_string(s - n));
      if (it->first[s] > 1) mono += "^" + std::to_string(it->first[s]);
    }
    Rational a = abs(it->second);
    std::string t = (a == 1 && !mono.empty()) ? mono : rational_str(a) + (mono.empty() ? "" : "*" + mono);
    if (out.empty()) {
      out = (sgn(it->second) < 0 ? "-" : "") + t;
    } else {
      out += (sgn(it->second) < 0 ? " - " : " + ") + t;
    }
  }
  return out;
}

std::pair<RealPoly, RealPoly> realify(const Poly& f) {
  // Work in a scratch complex ring over the same slot count, reinterpreting
  // slot s <= n as x_{s+1} and slot n+1+s as y_{s+1}.
  int n = f.n;
  VarTable v = f.vars();
  GaussianRational iu = GaussianRational::unit_i();
  std::vector<Poly> subs(v.slots(), Poly(n));
  for (int k = 0; k <= n; ++k) {
    Poly x = Poly::variable(n, k);
    Poly y = Poly::variable(n, n + 1 + k);
    subs[k] = x + y.scaled(iu);                    // z_{k+1} = x + i y
    subs[v.conj_slot(k)] = x + y.scaled(-iu);      // conj
  }
  Poly acc(n);
  for (const auto& [e, c] : f.terms) {
    Poly t = Poly::constant(n, c);
    for (int s = 0; s < v.slots(); ++s) {
      if (e[s] == 0) continue;
      t = t * subs[s].pow(static_cast<unsigned>(e[s]));
    }
    acc += t;
  }
  RealPoly re(n), im(n);
  for (const auto& [e, c] : acc.terms) {
    re.add_term(e, c.re);
    im.add_term(e, c.im);
  }
  return {re, im};
}

}  // namespace crgeo
