#include "doctest.h"

#include <cmath>

#include "ginoe/moments.hpp"
#include "ginoe/transforms.hpp"

using namespace ginoe;

namespace {
const PrecisionContext ctx(128);
const long w = ctx.working_bits();

bool agree(const BigReal& a, const BigReal& b) {
  return cmp_value(abs(a - b), a.err_as_value() + b.err_as_value()) <= 0;
}

BigReal to_real(const Sqrt2Rational& v, long prec) {
  return BigReal::from_rational(v.a, prec) +
         BigReal::from_rational(v.b, prec) * sqrt(BigReal::from_long(2, prec));
}
}  // namespace

TEST_CASE("u(0) = M0, evenness, u''(0) = M2") {
  TransformValue u0 = mgf_value(4, BigReal::zero(w), 2, ctx);
  CHECK(agree(u0.value.re, to_real(m0_exact(4), w).round_to(ctx.target_bits)));
  CHECK(u0.derivs[0].re.certainly_abs_le(
      u0.derivs[0].re.err_as_value() + BigReal::two_pow(-100, 64)));  // u'(0) = 0
  CHECK(agree(u0.derivs[1].re, moment_real(4, 1L, ctx).value));
  BigReal t = BigReal::from_double(0.7, w);
  TransformValue up = mgf_value(5, t, 0, ctx);
  TransformValue um = mgf_value(5, -t, 0, ctx);
  CHECK(agree(up.value.re, um.value.re));
}

TEST_CASE("mgf truncation: extending the series stays within the tail bound") {
  BigReal t = BigReal::from_double(1.3, w);
  TransformValue lo = mgf_value(6, t, 0, ctx);
  TransformValue hi = mgf_value(6, t, 0, PrecisionContext(256));
  CHECK(agree(lo.value.re, hi.value.re));
}

TEST_CASE("mgf ODE residual vanishes within err; residual(0) = 0") {
  BigReal r0 = mgf_ode_residual(4, BigReal::zero(w), ctx);
  CHECK(cmp_value(abs(r0), r0.err_as_value()) <= 0);
  for (auto& [N, td] : std::vector<std::pair<long, double>>{{6, 0.7}, {3, 2.5}, {9, 1.2}}) {
    PrecisionContext c192(192);
    BigReal res = mgf_ode_residual(N, BigReal::from_double(td, c192.working_bits()), c192);
    CAPTURE(N);
    CHECK(cmp_value(abs(res), res.err_as_value()) <= 0);
  }
}

TEST_CASE("residual shrinks at least linearly in precision bits") {
  BigReal t128 = BigReal::from_double(0.9, PrecisionContext(128).working_bits());
  BigReal r128 = mgf_ode_residual(5, t128, PrecisionContext(128));
  BigReal r256 = mgf_ode_residual(5, t128, PrecisionContext(256));
  BigReal m128 = abs(r128) + r128.err_as_value();
  BigReal m256 = abs(r256) + r256.err_as_value();
  CHECK(cmp_value(m256, mul_2exp(m128, -1)) <= 0);
}

TEST_CASE("stieltjes: parity and conjugation symmetries") {
  // W(iy) purely imaginary
  BigComplex iy(BigReal::zero(w), BigReal::from_double(2.0, w));
  TransformValue W = stieltjes_value(4, iy, 0, ctx);
  CHECK(cmp_value(abs(W.value.re), W.value.re.err_as_value()) <= 0);
  // W(conj t) = conj W(t) at t = 2 + i
  BigComplex t(BigReal::from_long(2, w), BigReal::one(w));
  TransformValue Wt = stieltjes_value(4, t, 0, ctx);
  TransformValue Wc = stieltjes_value(4, conj(t), 0, ctx);
  CHECK(agree(Wt.value.re, Wc.value.re));
  CHECK(agree(Wt.value.im, -Wc.value.im));
}

TEST_CASE("t W(t) -> M0 ordering check at t = 10^4 i") {
  BigComplex t(BigReal::zero(w), BigReal::from_long(10000, w));
  TransformValue W = stieltjes_value(3, t, 0, ctx);
  BigComplex tW = t * W.value;
  BigReal M0 = to_real(m0_exact(3), w);
  BigReal M2 = moment_real(3, 1L, ctx).value;
  // |t W - M0| <= M2 / |t| (expansion of the kernel)
  BigReal dev = abs(tW - BigComplex(M0));
  BigReal bound = M2 / BigReal::from_long(10000, w) + tW.total_err() + dev.err_as_value();
  CHECK(cmp_value(dev, bound) <= 0);
}

TEST_CASE("stieltjes preconditions") {
  BigComplex treal(BigReal::from_double(1.5, w), BigReal::zero(w));
  CHECK_THROWS_AS(stieltjes_value(4, treal, 0, ctx), DomainError);
  BigComplex tfar(BigReal::from_long(80, w), BigReal::zero(w));
  TransformValue W = stieltjes_value(4, tfar, 0, ctx);  // allowed: |t| > cutoff
  CHECK(W.value.re.sign_value() > 0);
  CHECK_THROWS_AS(stieltjes_value(4, tfar, 2, ctx), DomainError);
}

TEST_CASE("stieltjes ODE residual vanishes within err") {
  for (auto& [N, re, im] : std::vector<std::tuple<long, double, double>>{
           {5, 0.0, 2.0}, {3, 1.0, 1.0}, {7, 0.5, 1.5}}) {
    BigComplex t(BigReal::from_double(re, w), BigReal::from_double(im, w));
    BigComplex res = stieltjes_ode_residual(N, t, ctx);
    CAPTURE(N);
    BigReal dev = abs(res);
    CHECK(cmp_value(dev, res.total_err() + dev.err_as_value()) <= 0);
  }
}

TEST_CASE("stieltjes residual shrinks with precision") {
  BigComplex t(BigReal::one(PrecisionContext(96).working_bits()),
               BigReal::from_long(2, PrecisionContext(96).working_bits()));
  BigComplex r96 = stieltjes_ode_residual(5, t, PrecisionContext(96));
  BigComplex r192 = stieltjes_ode_residual(5, t, PrecisionContext(192));
  BigReal m96 = abs(r96) + r96.total_err();
  BigReal m192 = abs(r192) + r192.total_err();
  CHECK(cmp_value(m192, mul_2exp(m96, -1)) <= 0);
}
