#include "ginoe/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace ginoe {

namespace {

constexpr mpfr_prec_t EP = BigReal::kErrPrec;

// Scratch err-precision variable with round-up semantics.
struct ErrTmp {
  mpfr_t t;
  ErrTmp() { mpfr_init2(t, EP); mpfr_set_zero(t, 1); }
  explicit ErrTmp(const mpfr_t src) { mpfr_init2(t, EP); mpfr_set(t, src, MPFR_RNDU); }
  ~ErrTmp() { mpfr_clear(t); }
  ErrTmp(const ErrTmp&) = delete;
};

// err += 1 ulp of r if the ternary value says the rounding was inexact.
void add_rounding_err(mpfr_t err, const mpfr_t r, int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(r)) {
    // Inexact zero cannot arise from the operations used here.
    throw InternalInconsistencyError("BigReal: inexact rounding to zero");
  }
  ErrTmp u;
  mpfr_set_ui_2exp(u.t, 1, mpfr_get_exp(r) - mpfr_get_prec(r), MPFR_RNDU);
  mpfr_add(err, err, u.t, MPFR_RNDU);
}

mpfr_prec_t join_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

class BigRealOps {
 public:
  static mpfr_ptr v(BigReal& x) { return x.v_; }
  static mpfr_ptr e(BigReal& x) { return x.e_; }
  static mpfr_srcptr v(const BigReal& x) { return x.v_; }
  static mpfr_srcptr e(const BigReal& x) { return x.e_; }
};

using O = BigRealOps;

BigReal BigReal::from_long(long n, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_si(O::v(r), n, MPFR_RNDN);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal BigReal::from_double(double d, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_d(O::v(r), d, MPFR_RNDN);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal BigReal::from_integer(const Integer& z, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_z(O::v(r), z.get_mpz_t(), MPFR_RNDN);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal BigReal::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_set_q(O::v(r), q.get_mpq_t(), MPFR_RNDN);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(prec);
  int t = mpfr_const_pi(O::v(r), MPFR_RNDN);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal BigReal::two_pow(long e, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_ui_2exp(O::v(r), 1, e, MPFR_RNDN);
  return r;
}

bool BigReal::definitely_positive() const {
  if (mpfr_sgn(v_) <= 0) return false;
  ErrTmp diff;
  mpfr_sub(diff.t, v_, e_, MPFR_RNDD);
  return mpfr_sgn(diff.t) > 0;
}

bool BigReal::definitely_negative() const {
  if (mpfr_sgn(v_) >= 0) return false;
  ErrTmp s;
  mpfr_add(s.t, v_, e_, MPFR_RNDU);
  return mpfr_sgn(s.t) < 0;
}

BigReal BigReal::abs_upper() const {
  BigReal r(EP);
  mpfr_abs(O::v(r), v_, MPFR_RNDU);
  mpfr_add(O::v(r), O::v(r), e_, MPFR_RNDU);
  return r;
}

BigReal BigReal::abs_lower() const {
  BigReal r(EP);
  mpfr_abs(O::v(r), v_, MPFR_RNDD);
  mpfr_sub(O::v(r), O::v(r), e_, MPFR_RNDD);
  if (mpfr_sgn(O::v(r)) < 0) mpfr_set_zero(O::v(r), 1);
  return r;
}

BigReal BigReal::err_as_value() const {
  BigReal r(EP);
  mpfr_set(O::v(r), e_, MPFR_RNDU);
  return r;
}

bool BigReal::certainly_abs_le(const BigReal& bound) const {
  ErrTmp lhs, rhs;
  mpfr_abs(lhs.t, v_, MPFR_RNDU);
  mpfr_add(lhs.t, lhs.t, e_, MPFR_RNDU);
  mpfr_sub(rhs.t, bound.v_, bound.e_, MPFR_RNDD);
  return mpfr_cmp(lhs.t, rhs.t) <= 0;
}

void BigReal::add_error(const BigReal& extra) {
  ErrTmp u;
  mpfr_abs(u.t, extra.v_, MPFR_RNDU);
  mpfr_add(u.t, u.t, extra.e_, MPFR_RNDU);
  mpfr_add(e_, e_, u.t, MPFR_RNDU);
}

void BigReal::add_error_2exp(long e) {
  ErrTmp u;
  mpfr_set_ui_2exp(u.t, 1, e, MPFR_RNDU);
  mpfr_add(e_, e_, u.t, MPFR_RNDU);
}

BigReal BigReal::round_to(mpfr_prec_t bits) const {
  BigReal r(bits);
  int t = mpfr_set(O::v(r), v_, MPFR_RNDN);
  mpfr_set(O::e(r), e_, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

std::string BigReal::to_string(size_t digits) const {
  char fmt[48];
  std::snprintf(fmt, sizeof fmt, "%%.%zuRe", digits);
  char* s = nullptr;
  if (mpfr_asprintf(&s, fmt, v_) < 0) throw Error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigReal::err_to_string() const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.3Re", e_) < 0) throw Error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// ---------------------------------------------------------------------------
// arithmetic

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(join_prec(a, b));
  int t = mpfr_add(O::v(r), O::v(a), O::v(b), MPFR_RNDN);
  mpfr_add(O::e(r), O::e(a), O::e(b), MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(join_prec(a, b));
  int t = mpfr_sub(O::v(r), O::v(a), O::v(b), MPFR_RNDN);
  mpfr_add(O::e(r), O::e(a), O::e(b), MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a);
  mpfr_neg(O::v(r), O::v(r), MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& a) {
  BigReal r(a);
  mpfr_abs(O::v(r), O::v(r), MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(join_prec(a, b));
  int t = mpfr_mul(O::v(r), O::v(a), O::v(b), MPFR_RNDN);
  // |xy - x~y~| <= |x~| eb + |y~| ea + ea eb
  ErrTmp ax, by, p;
  mpfr_abs(ax.t, O::v(a), MPFR_RNDU);
  mpfr_abs(by.t, O::v(b), MPFR_RNDU);
  mpfr_mul(p.t, ax.t, O::e(b), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), p.t, MPFR_RNDU);
  mpfr_mul(p.t, by.t, O::e(a), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), p.t, MPFR_RNDU);
  mpfr_mul(p.t, O::e(a), O::e(b), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), p.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (!b.definitely_nonzero())
    throw DomainError("BigReal: division by a value not certified nonzero");
  BigReal r(join_prec(a, b));
  int t = mpfr_div(O::v(r), O::v(a), O::v(b), MPFR_RNDN);
  // |x/y - x~/y~| <= (ea + |x~/y~| eb) / (|y~| - eb)
  ErrTmp den, q, num;
  mpfr_abs(den.t, O::v(b), MPFR_RNDD);
  mpfr_sub(den.t, den.t, O::e(b), MPFR_RNDD);
  mpfr_abs(q.t, O::v(r), MPFR_RNDU);
  mpfr_mul(num.t, q.t, O::e(b), MPFR_RNDU);
  mpfr_add(num.t, num.t, O::e(a), MPFR_RNDU);
  mpfr_div(num.t, num.t, den.t, MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), num.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal mul_2exp(const BigReal& a, long e) {
  BigReal r(a);
  mpfr_mul_2si(O::v(r), O::v(r), e, MPFR_RNDN);
  mpfr_mul_2si(O::e(r), O::e(r), e, MPFR_RNDU);
  return r;
}

BigReal mul_long(const BigReal& a, long n) {
  BigReal r(a.prec());
  int t = mpfr_mul_si(O::v(r), O::v(a), n, MPFR_RNDN);
  mpfr_mul_si(O::e(r), O::e(a), n >= 0 ? n : -n, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal div_long(const BigReal& a, long n) {
  if (n == 0) throw DomainError("BigReal: division by zero integer");
  BigReal r(a.prec());
  int t = mpfr_div_si(O::v(r), O::v(a), n, MPFR_RNDN);
  mpfr_div_si(O::e(r), O::e(a), n >= 0 ? n : -n, MPFR_RNDU);
  mpfr_abs(O::e(r), O::e(r), MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal sqrt(const BigReal& a) {
  if (mpfr_sgn(O::v(a)) < 0) throw DomainError("BigReal: sqrt of negative value");
  BigReal r(a.prec());
  int t = mpfr_sqrt(O::v(r), O::v(a), MPFR_RNDN);
  // |sqrt x - sqrt x~|: if x~ > ea, <= ea / (2 sqrt(x~ - ea)); else <= sqrt(x~ + ea).
  ErrTmp lo;
  mpfr_sub(lo.t, O::v(a), O::e(a), MPFR_RNDD);
  if (mpfr_sgn(lo.t) > 0) {
    mpfr_sqrt(lo.t, lo.t, MPFR_RNDD);
    mpfr_mul_2si(lo.t, lo.t, 1, MPFR_RNDD);
    ErrTmp prop;
    mpfr_div(prop.t, O::e(a), lo.t, MPFR_RNDU);
    mpfr_add(O::e(r), O::e(r), prop.t, MPFR_RNDU);
  } else {
    ErrTmp hi;
    mpfr_add(hi.t, O::v(a), O::e(a), MPFR_RNDU);
    mpfr_sqrt(hi.t, hi.t, MPFR_RNDU);
    mpfr_add(O::e(r), O::e(r), hi.t, MPFR_RNDU);
  }
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal exp(const BigReal& a) {
  BigReal r(a.prec());
  int t = mpfr_exp(O::v(r), O::v(a), MPFR_RNDN);
  // sup |exp'| over the interval = exp(x~ + ea)
  ErrTmp s;
  mpfr_add(s.t, O::v(a), O::e(a), MPFR_RNDU);
  mpfr_exp(s.t, s.t, MPFR_RNDU);
  mpfr_mul(s.t, s.t, O::e(a), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), s.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal log(const BigReal& a) {
  ErrTmp lo;
  mpfr_sub(lo.t, O::v(a), O::e(a), MPFR_RNDD);
  if (mpfr_sgn(lo.t) <= 0) throw DomainError("BigReal: log of value not certified positive");
  BigReal r(a.prec());
  int t = mpfr_log(O::v(r), O::v(a), MPFR_RNDN);
  ErrTmp s;
  mpfr_div(s.t, O::e(a), lo.t, MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), s.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

namespace {
BigReal trig_impl(const BigReal& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigReal r(a.prec());
  int t = fn(O::v(r), O::v(a), MPFR_RNDN);
  mpfr_add(O::e(r), O::e(r), O::e(a), MPFR_RNDU);  // |sin'|,|cos'| <= 1
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}
BigReal hyper_impl(const BigReal& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigReal r(a.prec());
  int t = fn(O::v(r), O::v(a), MPFR_RNDN);
  // |sinh'| and |cosh'| <= cosh(|x~| + ea)
  ErrTmp s;
  mpfr_abs(s.t, O::v(a), MPFR_RNDU);
  mpfr_add(s.t, s.t, O::e(a), MPFR_RNDU);
  mpfr_cosh(s.t, s.t, MPFR_RNDU);
  mpfr_mul(s.t, s.t, O::e(a), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), s.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}
}  // namespace

BigReal sin(const BigReal& a) { return trig_impl(a, mpfr_sin); }
BigReal cos(const BigReal& a) { return trig_impl(a, mpfr_cos); }
BigReal sinh(const BigReal& a) { return hyper_impl(a, mpfr_sinh); }
BigReal cosh(const BigReal& a) { return hyper_impl(a, mpfr_cosh); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  // gradient bound: |d atan2 / dx| = |y|/(x^2+y^2), |d/dy| = |x|/(x^2+y^2)
  BigReal r(join_prec(x, y));
  int t = mpfr_atan2(O::v(r), O::v(y), O::v(x), MPFR_RNDN);
  ErrTmp x2, y2, den, ax, ay, num;
  mpfr_abs(ax.t, O::v(x), MPFR_RNDD);
  mpfr_sub(ax.t, ax.t, O::e(x), MPFR_RNDD);
  if (mpfr_sgn(ax.t) < 0) mpfr_set_zero(ax.t, 1);
  mpfr_abs(ay.t, O::v(y), MPFR_RNDD);
  mpfr_sub(ay.t, ay.t, O::e(y), MPFR_RNDD);
  if (mpfr_sgn(ay.t) < 0) mpfr_set_zero(ay.t, 1);
  mpfr_sqr(x2.t, ax.t, MPFR_RNDD);
  mpfr_sqr(y2.t, ay.t, MPFR_RNDD);
  mpfr_add(den.t, x2.t, y2.t, MPFR_RNDD);
  if (mpfr_sgn(den.t) <= 0)
    throw DomainError("BigReal: atan2 with interval containing the origin");
  mpfr_abs(ax.t, O::v(x), MPFR_RNDU);
  mpfr_add(ax.t, ax.t, O::e(x), MPFR_RNDU);
  mpfr_abs(ay.t, O::v(y), MPFR_RNDU);
  mpfr_add(ay.t, ay.t, O::e(y), MPFR_RNDU);
  mpfr_mul(num.t, ay.t, O::e(x), MPFR_RNDU);
  ErrTmp num2;
  mpfr_mul(num2.t, ax.t, O::e(y), MPFR_RNDU);
  mpfr_add(num.t, num.t, num2.t, MPFR_RNDU);
  mpfr_div(num.t, num.t, den.t, MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), num.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal pow_si(const BigReal& a, long n) {
  if (n == 0) return BigReal::one(a.prec());
  BigReal r(a.prec());
  int t = mpfr_pow_si(O::v(r), O::v(a), n, MPFR_RNDN);
  ErrTmp sup;
  long an = n >= 0 ? n : -n;
  if (n >= 1) {
    // sup |n x^{n-1}| over interval = n (|x~|+ea)^{n-1}
    mpfr_abs(sup.t, O::v(a), MPFR_RNDU);
    mpfr_add(sup.t, sup.t, O::e(a), MPFR_RNDU);
    mpfr_pow_si(sup.t, sup.t, n - 1, MPFR_RNDU);
  } else {
    // need |x| certified away from 0; sup = |n| (|x~|-ea)^{n-1}
    ErrTmp lo;
    mpfr_abs(lo.t, O::v(a), MPFR_RNDD);
    mpfr_sub(lo.t, lo.t, O::e(a), MPFR_RNDD);
    if (mpfr_sgn(lo.t) <= 0)
      throw DomainError("BigReal: negative power of value not certified nonzero");
    mpfr_pow_si(sup.t, lo.t, n - 1, MPFR_RNDU);
    mpfr_abs(sup.t, sup.t, MPFR_RNDU);
  }
  mpfr_mul_si(sup.t, sup.t, an, MPFR_RNDU);
  mpfr_mul(sup.t, sup.t, O::e(a), MPFR_RNDU);
  mpfr_add(O::e(r), O::e(r), sup.t, MPFR_RNDU);
  add_rounding_err(O::e(r), O::v(r), t);
  return r;
}

BigReal pow(const BigReal& a, const BigReal& b) {
  if (!a.definitely_positive()) throw DomainError("BigReal: pow needs base certified positive");
  return exp(b * log(a));
}

BigReal max_value(const BigReal& a, const BigReal& b) { return cmp_value(a, b) >= 0 ? a : b; }
BigReal min_value(const BigReal& a, const BigReal& b) { return cmp_value(a, b) <= 0 ? a : b; }

}  // namespace ginoe
