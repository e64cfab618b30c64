#include "ginoe/bigcomplex.hpp"

namespace ginoe {

BigReal BigComplex::total_err() const {
  return re.err_as_value() + im.err_as_value();
}

BigReal BigComplex::abs_upper() const {
  BigReal r = re.abs_upper();
  BigReal i = im.abs_upper();
  return r + i;  // crude but valid upper bound for |z|
}

BigReal BigComplex::abs_lower() const {
  // max(|re|_lo, |im|_lo) <= |z|
  BigReal r = re.abs_lower();
  BigReal i = im.abs_lower();
  return max_value(r, i);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (!b.definitely_nonzero())
    throw DomainError("BigComplex: division by value not certified nonzero");
  BigReal n = b.re * b.re + b.im * b.im;
  BigComplex num = a * conj(b);
  return {num.re / n, num.im / n};
}

BigReal abs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

BigComplex exp(const BigComplex& a) {
  BigReal m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

BigComplex log(const BigComplex& a) {
  BigReal m = abs(a);
  return {log(m), atan2(a.im, a.re)};
}

BigComplex sin_pi(const BigComplex& a, mpfr_prec_t prec) {
  BigReal p = BigReal::pi(prec);
  BigReal x = p * a.re, y = p * a.im;
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  return {sin(x) * cosh(y), cos(x) * sinh(y)};
}

}  // namespace ginoe
