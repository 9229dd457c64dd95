#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crgeo {

using Rational = mpq_class;

// Status values shared with the C ABI and the CLI exit codes.
enum class Status : int {
  ok = 0,
  parse_error = 2,
  precondition = 3,
  inconclusive = 4,
  verify_failed = 5,
  bad_argument = 6,
  internal = 7,
};

struct Error : std::runtime_error {
  Status status;
  Error(Status st, const std::string& msg) : std::runtime_error(msg), status(st) {}
};

struct ParseError : Error {
  std::size_t pos;  // byte offset into the offending text
  ParseError(std::size_t at, const std::string& msg)
      : Error(Status::parse_error, msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(Status::precondition, msg) {}
};

// "p", "-p", "p/q"; canonicalized to lowest terms, positive denominator.
Rational rational_from_string(const std::string& text);

std::string rational_str(const Rational& q);

// Exact element of Q(i). Both parts are kept canonical by mpq_class.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {  // NOLINT
    re.canonicalize();
  }
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    // mpq_class(p, q) does not reduce; downstream exact comparison requires
    // canonical form everywhere.
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm() const { return re * re + im * im; }  // |.|^2

  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  std::string str() const;
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

GaussianRational gpow(const GaussianRational& base, unsigned e);

}  // namespace crgeo
