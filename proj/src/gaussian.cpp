#include "gaussian.hpp"

namespace crgeo {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError(0, "empty rational literal");
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  bool digits = false, slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (slash || !digits) throw ParseError(j, "malformed rational literal");
      slash = true;
      digits = false;
    } else if (text[j] >= '0' && text[j] <= '9') {
      digits = true;
    } else {
      throw ParseError(j, "unexpected character in rational literal");
    }
  }
  if (!digits) throw ParseError(text.size(), "malformed rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError(0, "unparseable rational literal");
  if (sgn(q.get_den()) == 0) throw ParseError(0, "zero denominator");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw Error(Status::internal, "division by zero in Q(i)");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool have_re = sgn(re) != 0;
  if (have_re) out = rational_str(re);
  if (sgn(im) != 0) {
    Rational a = abs(im);
    std::string part = (a == 1) ? "i" : rational_str(a) + "*i";
    if (!have_re) {
      out = (sgn(im) < 0 ? "-" : "") + part;
    } else {
      out += (sgn(im) < 0 ? "-" : "+") + part;
    }
  }
  return out;
}

GaussianRational gpow(const GaussianRational& base, unsigned e) {
  GaussianRational acc(1);
  GaussianRational b = base;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

}  // namespace crgeo
