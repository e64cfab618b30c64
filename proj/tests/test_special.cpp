#include "doctest.h"

#include "ginoe/quadrature.hpp"
#include "ginoe/special.hpp"

using namespace ginoe;

namespace {
const PrecisionContext ctx(192);

double vdiff(const BigReal& a, const BigReal& b) { return abs(a - b).to_double(); }

bool agree(const BigReal& a, const BigReal& b) {
  return cmp_value(abs(a - b), a.err_as_value() + b.err_as_value()) <= 0;
}
}  // namespace

TEST_CASE("double factorial convention") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), DomainError);
}

TEST_CASE("gamma function basics") {
  long w = ctx.working_bits();
  CHECK(vdiff(gamma_fn(BigReal::one(w), ctx), BigReal::one(w)) == 0.0);
  BigReal half = BigReal::from_rational(Rational(1, 2), w);
  CHECK(agree(gamma_fn(half, ctx), sqrt(BigReal::pi(w)).round_to(ctx.target_bits)));
  // reflection: Gamma(-1/2) Gamma(3/2) = pi / sin(-pi/2) = -pi
  BigReal prod = gamma_fn(-half, ctx) * gamma_fn(half + BigReal::one(w), ctx);
  CHECK(agree(prod, -BigReal::pi(w)));
  CHECK_THROWS_AS(gamma_fn(BigReal::from_long(-3, w), ctx), DomainError);
  CHECK_THROWS_AS(gamma_fn(BigReal::zero(w), ctx), DomainError);
}

TEST_CASE("complex gamma against reflection, recurrence, and a frozen point") {
  long w = ctx.working_bits();
  BigComplex z = BigComplex::from_rational(Rational(3, 10), Rational(7, 10), w);
  BigComplex g = gamma_fn(z, ctx);
  // frozen from an independent arbitrary-precision evaluation
  BigReal re_ref = BigReal::from_double(0.30968625674374912899814320511596611621, w);
  BigReal im_ref = BigReal::from_double(-0.85678775293927049594946049611342835556, w);
  CHECK(vdiff(g.re, re_ref) < 1e-15);
  CHECK(vdiff(g.im, im_ref) < 1e-15);
  // recurrence Gamma(z+1) = z Gamma(z)
  BigComplex g1 = gamma_fn(z + BigComplex::from_long(1, 0, w), ctx);
  CHECK(abs(g1 - z * g).to_double() < 1e-50);
  // reflection region (Re < 1/2 path) consistency with the identity
  BigComplex zneg = BigComplex::from_rational(Rational(-7, 10), Rational(2, 5), w);
  BigComplex lhs = gamma_fn(zneg, ctx) * gamma_fn(BigComplex::from_long(1, 0, w) - zneg, ctx);
  BigComplex rhs = BigComplex(BigReal::pi(w)) / sin_pi(zneg, w);
  CHECK(abs(lhs - rhs).to_double() < 1e-50);
  // validation under precision doubling: deviation within joint error bounds
  BigComplex hi = gamma_fn(z, ctx.doubled());
  BigReal dev = abs(g - hi);
  CHECK(cmp_value(dev, g.total_err() + hi.total_err() + dev.err_as_value()) <= 0);
}

TEST_CASE("incomplete gamma identities and frozen values") {
  long w = ctx.working_bits();
  // Gamma(1, x) = e^-x
  for (double xd : {0.3, 2.0, 17.5}) {
    BigReal x = BigReal::from_double(xd, w);
    BigReal rhs = exp(-x).round_to(ctx.target_bits);
    CHECK(agree(upper_incomplete_gamma(BigReal::one(w), x, ctx), rhs));
  }
  // Gamma(a, 0) = Gamma(a)
  BigReal a = BigReal::from_rational(Rational(7, 2), w);
  CHECK(agree(upper_incomplete_gamma(a, BigReal::zero(w), ctx), gamma_fn(a, ctx)));
  // lower(1/2, x) = sqrt(pi) erf(sqrt x)
  BigReal half = BigReal::from_rational(Rational(1, 2), w);
  for (double xd : {0.4, 1.9, 6.0}) {
    BigReal x = BigReal::from_double(xd, w);
    BigReal lhs = lower_incomplete_gamma(half, x, ctx);
    BigReal rhs = sqrt(BigReal::pi(w)) * erf_fn(sqrt(x), ctx);
    CHECK(agree(lhs, rhs));
  }
  // frozen: Gamma(7/2, 2.5), lower(3/4, 3.25)
  BigReal g72 = upper_incomplete_gamma(a, BigReal::from_double(2.5, w), ctx);
  CHECK(vdiff(g72, BigReal::from_double(2.1932894398643868492636302658396473708, w)) < 1e-14);
  BigReal l34 = lower_incomplete_gamma(BigReal::from_rational(Rational(3, 4), w),
                                       BigReal::from_double(3.25, w), ctx);
  CHECK(vdiff(l34, BigReal::from_double(1.1982221073287242675315387009301130322, w)) < 1e-14);
  // domain errors
  CHECK_THROWS_AS(lower_incomplete_gamma(BigReal::zero(w), BigReal::one(w), ctx), DomainError);
  CHECK_THROWS_AS(upper_incomplete_gamma(BigReal::from_long(-1, w), BigReal::one(w), ctx),
                  DomainError);
}

TEST_CASE("upper + lower = Gamma across a sweep, monotonicity in x") {
  long w = ctx.working_bits();
  for (long twice_a : {1L, 2L, 3L, 7L, 11L, 24L}) {
    BigReal a = BigReal::from_rational(Rational(twice_a, 2), w);
    BigReal g = gamma_fn(a, ctx);
    BigReal prev_up(w);
    bool have_prev = false;
    for (double xd : {0.1, 0.9, 1.7, 3.0, 8.0, 21.0}) {
      BigReal x = BigReal::from_double(xd, w);
      BigReal up = upper_incomplete_gamma(a, x, ctx);
      BigReal lo = lower_incomplete_gamma(a, x, ctx);
      CHECK(agree(up + lo, g));
      if (have_prev) CHECK(cmp_value(up, prev_up) < 0);  // decreasing in x
      prev_up = up;
      have_prev = true;
    }
  }
}

TEST_CASE("erf: parity, complement, quadrature oracle at 1") {
  long w = ctx.working_bits();
  CHECK(erf_fn(BigReal::zero(w), ctx).is_zero_value());
  BigReal x = BigReal::from_double(0.8, w);
  CHECK(vdiff(erf_fn(-x, ctx), -erf_fn(x, ctx)) == 0.0);
  CHECK(agree(erf_fn(x, ctx) + erfc_fn(x, ctx), BigReal::one(w)));
  // defining integral: erf(1) = (2/sqrt pi) int_0^1 e^{-t^2} dt by quadrature
  BigReal I = integrate([&](const BigReal& t) { return exp(-(t * t)); }, BigReal::zero(w),
                        BigReal::one(w), w, BigReal::two_pow(-(ctx.target_bits + 8), 64));
  BigReal oracle = mul_2exp(I / sqrt(BigReal::pi(w)), 1).round_to(ctx.target_bits);
  CHECK(agree(erf_fn(BigReal::one(w), ctx), oracle));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(3) == Rational(0));
}
