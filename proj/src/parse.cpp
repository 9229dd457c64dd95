#include "parse.hpp"

#include <cctype>

namespace crgeo {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool lookahead_word(const char* word) {
    skip_ws();
    std::size_t i = 0;
    while (word[i] != '\0') {
      if (pos_ + i >= s_.size() || s_[pos_ + i] != word[i]) return false;
      ++i;
    }
    return true;
  }

  void eat_word(const char* word) {
    skip_ws();
    for (std::size_t i = 0; word[i] != '\0'; ++i) ++pos_;
  }

  unsigned read_posint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a positive integer");
    }
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    if (v == 0) fail("expected a positive integer");
    return static_cast<unsigned>(v);
  }

  Poly expr() {
    bool neg = eat('-');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (peek() == '^') {
      ++pos_;
      unsigned e = read_posint();
      if (e > 64) fail("exponent too large");
      b = b.pow(e);
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')', "to close '('");
      return p;
    }
    if (c == '|') {
      ++pos_;
      Poly p = expr();
      expect('|', "to close '|'");
      expect('^', "after '|...|'");
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '2') fail("modulus form is |expr|^2");
      ++pos_;
      return p * p.conj_involution();
    }
    if (lookahead_word("conj(")) {
      eat_word("conj(");
      Poly p = expr();
      expect(')', "to close conj(");
      return p.conj_involution();
    }
    if (lookahead_word("Re(")) {
      eat_word("Re(");
      Poly p = expr();
      expect(')', "to close Re(");
      return (p + p.conj_involution()).scaled(GaussianRational(Rational(1, 2)));
    }
    if (lookahead_word("Im(")) {
      eat_word("Im(");
      Poly p = expr();
      expect(')', "to close Im(");
      // (e - conj(e)) / (2i) = (e - conj(e)) * (-i/2)
      return (p - p.conj_involution()).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    }
    if (c == 'i') {
      ++pos_;
      return Poly::constant(n_, GaussianRational::unit_i());
    }
    if (c == 'w') {
      ++pos_;
      return Poly::variable(n_, VarTable(n_).w());
    }
    if (c == 'z') {
      ++pos_;
      unsigned k = read_posint();
      if (static_cast<int>(k) > n_) fail("variable index out of range (n=" + std::to_string(n_) + ")");
      return Poly::variable(n_, VarTable(n_).z(static_cast<int>(k)));
    }
    fail("unexpected character");
  }

  Poly number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string lit = s_.substr(start, pos_ - start);
    // A '/' directly followed by digits is a rational literal, not division.
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string den = s_.substr(dstart, pos_ - dstart);
        Rational q;
        try {
          q = rational_from_string(lit + "/" + den);
        } catch (const ParseError& e) {
          throw ParseError(slash, e.what());
        }
        return Poly::constant(n_, GaussianRational(q));
      }
      pos_ = save;
    } else {
      pos_ = save;
    }
    return Poly::constant(n_, GaussianRational(rational_from_string(lit)));
  }
};

}  // namespace

Poly parse_poly(const std::string& text, int n) {
  if (n < 0) throw Error(Status::bad_argument, "negative variable count");
  return Parser(text, n).run();
}

Point parse_point(const std::string& text, int n) {
  std::vector<GaussianRational> coords;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(')) ++depth;
    if (i < text.size() && (text[i] == ')')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      Poly c = parse_poly(text.substr(start, i - start), n);
      if (c.degree() > 0) throw ParseError(start, "point coordinate must be constant");
      coords.push_back(c.constant_term());
      start = i + 1;
    }
  }
  if (static_cast<int>(coords.size()) != n + 1) {
    throw ParseError(0, "expected " + std::to_string(n + 1) + " coordinates, got " +
                            std::to_string(coords.size()));
  }
  return Point(n, std::move(coords));
}

}  // namespace crgeo
