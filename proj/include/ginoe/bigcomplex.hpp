#ifndef GINOE_BIGCOMPLEX_HPP
#define GINOE_BIGCOMPLEX_HPP

#include "ginoe/bigreal.hpp"

namespace ginoe {

// Complex value as a pair of BigReals; joint absolute error bound is
// err_re + err_im (an upper bound for the modulus of the deviation).
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re(BigReal::zero(prec)), im(BigReal::zero(prec)) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigReal r) : re(std::move(r)), im(BigReal::zero(re.prec())) {}

  static BigComplex from_long(long a, long b, mpfr_prec_t prec) {
    return {BigReal::from_long(a, prec), BigReal::from_long(b, prec)};
  }
  static BigComplex from_rational(const Rational& a, const Rational& b, mpfr_prec_t prec) {
    return {BigReal::from_rational(a, prec), BigReal::from_rational(b, prec)};
  }

  bool imag_is_zero() const { return im.is_zero_value() && im.exact(); }
  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

  // Upper bound on the total (modulus) error.
  BigReal total_err() const;
  // Upper / certified-lower bounds on |z|.
  BigReal abs_upper() const;
  BigReal abs_lower() const;
  bool definitely_nonzero() const { return abs_lower().sign_value() > 0; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
    return {s * a.re, s * a.im};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
  friend BigReal abs(const BigComplex& a);     // sqrt(re^2+im^2) with err
  friend BigComplex exp(const BigComplex& a);  // e^re (cos im, sin im)
  friend BigComplex log(const BigComplex& a);  // principal branch
  friend BigComplex sin_pi(const BigComplex& a, mpfr_prec_t prec);  // sin(pi a)

  BigComplex round_to(mpfr_prec_t bits) const { return {re.round_to(bits), im.round_to(bits)}; }
};

}  // namespace ginoe

#endif
