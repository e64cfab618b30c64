#ifndef GINOE_RATIONAL_HPP
#define GINOE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "ginoe/errors.hpp"

namespace ginoe {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Exact element of the field Q(sqrt 2): value = a + b*sqrt(2).
struct Sqrt2Rational {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(2)

  Sqrt2Rational() : a(0), b(0) {}
  Sqrt2Rational(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static Sqrt2Rational from_rational(const Rational& q) { return {q, Rational(0)}; }

  friend Sqrt2Rational operator+(const Sqrt2Rational& x, const Sqrt2Rational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Sqrt2Rational operator-(const Sqrt2Rational& x, const Sqrt2Rational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Sqrt2Rational operator-(const Sqrt2Rational& x) { return {-x.a, -x.b}; }
  friend Sqrt2Rational operator*(const Sqrt2Rational& x, const Sqrt2Rational& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Sqrt2Rational operator*(const Rational& q, const Sqrt2Rational& x) {
    return {q * x.a, q * x.b};
  }
  friend bool operator==(const Sqrt2Rational& x, const Sqrt2Rational& y) {
    return x.a == y.a && x.b == y.b;
  }

  // (a + b sqrt2)^{-1} = (a - b sqrt2) / (a^2 - 2 b^2); the norm vanishes only at 0.
  Sqrt2Rational inverse() const {
    Rational n = a * a - 2 * b * b;
    if (n == 0) throw DomainError("Sqrt2Rational: inverse of zero");
    return {a / n, -b / n};
  }
  friend Sqrt2Rational operator/(const Sqrt2Rational& x, const Sqrt2Rational& y) {
    return x * y.inverse();
  }

  bool is_zero() const { return a == 0 && b == 0; }

  std::string str() const { return "(" + a.get_str() + ") + (" + b.get_str() + ")*sqrt(2)"; }
};

}  // namespace ginoe

#endif
