#ifndef GINOE_BIGREAL_HPP
#define GINOE_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "ginoe/errors.hpp"
#include "ginoe/precision.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

// Precision-tagged real with an absolute error bound.
//
// The value is an mpfr number at the precision chosen at construction; err is
// a nonnegative upper bound on |true - value|, kept at a small fixed precision
// and always rounded up.  Every operation propagates err through a sup-of-
// derivative bound over the input interval plus the rounding error of the
// operation itself, so the bound stays valid (if pessimistic) under
// composition.  Tests validate the bounds by recomputation at higher
// precision.
class BigReal {
 public:
  static constexpr mpfr_prec_t kErrPrec = 32;

  BigReal() { init_(64); }
  explicit BigReal(mpfr_prec_t prec) { init_(prec); }
  BigReal(const BigReal& o) {
    init_(mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_set(e_, o.e_, MPFR_RNDU);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_init2(e_, kErrPrec);
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      mpfr_set(e_, o.e_, MPFR_RNDU);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
    return *this;
  }
  ~BigReal() {
    mpfr_clear(v_);
    mpfr_clear(e_);
  }

  // -- construction -------------------------------------------------------
  static BigReal from_long(long n, mpfr_prec_t prec);
  static BigReal from_double(double d, mpfr_prec_t prec);  // exact value of d
  static BigReal from_integer(const Integer& z, mpfr_prec_t prec);
  static BigReal from_rational(const Rational& q, mpfr_prec_t prec);
  static BigReal pi(mpfr_prec_t prec);
  static BigReal two_pow(long e, mpfr_prec_t prec);  // exact 2^e
  static BigReal zero(mpfr_prec_t prec) { return from_long(0, prec); }
  static BigReal one(mpfr_prec_t prec) { return from_long(1, prec); }

  // -- observers ----------------------------------------------------------
  mpfr_srcptr value() const { return v_; }
  mpfr_srcptr err() const { return e_; }
  // low-level escape hatch for special-function kernels; err bookkeeping is
  // the caller's responsibility when writing through these
  mpfr_ptr mutable_value() { return v_; }
  mpfr_ptr mutable_err() { return e_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool exact() const { return mpfr_zero_p(e_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  double err_to_double() const { return mpfr_get_d(e_, MPFR_RNDU); }
  bool is_zero_value() const { return mpfr_zero_p(v_); }
  bool is_integer_value() const { return mpfr_integer_p(v_); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  int sign_value() const { return mpfr_sgn(v_); }
  // value - err > 0 / value + err < 0: the sign is certified.
  bool definitely_positive() const;
  bool definitely_negative() const;
  bool definitely_nonzero() const { return definitely_positive() || definitely_negative(); }
  // |value| +/- err as coarse upper/lower bounds (lower clamped at 0).
  BigReal abs_upper() const;
  BigReal abs_lower() const;
  // the error bound as an exact value (err field of the result is 0)
  BigReal err_as_value() const;
  // true if |value| <= bound.value certainly: |v| + e <= bound.v - bound.e
  bool certainly_abs_le(const BigReal& bound) const;

  std::string to_string(size_t digits) const;
  std::string err_to_string() const;

  // -- mutation of the bound ----------------------------------------------
  void add_error(const BigReal& extra);      // err += |extra.v| + extra.e (round up)
  void add_error_2exp(long e);               // err += 2^e
  void set_error_zero() { mpfr_set_zero(e_, 1); }

  // Round the value to `bits` precision, inflating err by the rounding.
  BigReal round_to(mpfr_prec_t bits) const;

  // -- arithmetic ----------------------------------------------------------
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);
  BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
  BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
  BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
  BigReal& operator/=(const BigReal& b) { return *this = *this / b; }

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal exp(const BigReal& a);
  friend BigReal log(const BigReal& a);
  friend BigReal sin(const BigReal& a);
  friend BigReal cos(const BigReal& a);
  friend BigReal sinh(const BigReal& a);
  friend BigReal cosh(const BigReal& a);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  friend BigReal pow_si(const BigReal& a, long n);
  friend BigReal pow(const BigReal& a, const BigReal& b);  // a > 0, via exp(b log a)
  friend BigReal mul_2exp(const BigReal& a, long e);       // exact scaling by 2^e
  friend BigReal mul_long(const BigReal& a, long n);
  friend BigReal div_long(const BigReal& a, long n);
  friend BigReal max_value(const BigReal& a, const BigReal& b);
  friend BigReal min_value(const BigReal& a, const BigReal& b);

  // comparison of values only (err ignored); returns <0, 0, >0
  friend int cmp_value(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend int cmp_value_si(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b); }

 private:
  void init_(mpfr_prec_t prec) {
    if (prec < 2) prec = 2;
    mpfr_init2(v_, prec);
    mpfr_init2(e_, kErrPrec);
    mpfr_set_zero(v_, 1);
    mpfr_set_zero(e_, 1);
  }
  mpfr_t v_;
  mpfr_t e_;

  friend class BigRealOps;
};

// namespace-scope declarations of the friend operations (qualified lookup)
BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal sinh(const BigReal& a);
BigReal cosh(const BigReal& a);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow_si(const BigReal& a, long n);
BigReal pow(const BigReal& a, const BigReal& b);
BigReal mul_2exp(const BigReal& a, long e);
BigReal mul_long(const BigReal& a, long n);
BigReal div_long(const BigReal& a, long n);
BigReal max_value(const BigReal& a, const BigReal& b);
BigReal min_value(const BigReal& a, const BigReal& b);

}  // namespace ginoe

#endif
