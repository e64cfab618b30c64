#include "ginoe/transforms.hpp"

#include <cmath>

#include "ginoe/density.hpp"
#include "ginoe/moments.hpp"
#include "ginoe/quadrature.hpp"
#include "ginoe/special.hpp"

namespace ginoe {

namespace {

// upper bound B_p >= M_{2p,N}^r: sum over all eigenvalues of |lambda|^{2p}
// is at most ||G||_F^{2p}, whose mean is the chi-square moment
// N^2 (N^2+2) ... (N^2+2p-2).
Integer moment_envelope(long N, long p) {
  Integer r(1);
  for (long j = 0; j < p; ++j) r *= Integer(N * N + 2 * j);
  return r;
}

}  // namespace

TransformValue mgf_value(long N, const BigReal& t, long k_derivs, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("mgf_value: N must be >= 2");
  if (k_derivs < 0) throw DomainError("mgf_value: k_derivs must be >= 0");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal tw = t.round_to(w);
  double td = std::abs(tw.to_double());

  // choose p_max so the envelope tail closes below 2^-(w+16)
  long p_max = 8;
  {
    double logterm = 0;  // log2 of B_p |t|^{2p} / (2p - k)!
    long cap = 4000;
    double l2t = td > 0 ? std::log2(td) : -1e9;
    for (long p = 1;; ++p) {
      logterm += std::log2((double)(N * N + 2 * (p - 1)));
      logterm += 2 * l2t;
      double lg = std::lgamma((double)(2 * p - k_derivs + 1)) / std::log(2.0);
      if (2 * p >= k_derivs && logterm - lg < -(double)(w + 24) && p >= 4) {
        p_max = p + 2;
        break;
      }
      if (p > cap)
        throw NonConvergenceError("mgf_value: tail bound fails to close for this |t|");
    }
  }

  MomentValue M0 = m0_hyp(N, inner);
  MomentValue M2 = m2_hyp(N, inner);
  std::vector<MomentValue> M = moment_sequence_recurrence(N, std::max(p_max, 2L), M0, M2);

  TransformValue out;
  out.t = BigComplex(tw);
  for (long k = 0; k <= k_derivs; ++k) {
    BigReal acc = BigReal::zero(w);
    for (long p = 0; p <= p_max; ++p) {
      long e = 2 * p - k;
      if (e < 0) continue;
      BigReal term = M[(size_t)p].value * pow_si(tw, e) /
                     BigReal::from_integer(factorial_int((unsigned long)e), w);
      acc += term;
    }
    // tail: sum_{p > p_max} B_p |t|^{2p-k} / (2p-k)! <= 2 * first term (ratio <= 1/2)
    {
      long p1 = p_max + 1;
      BigReal bp = BigReal::from_integer(moment_envelope(N, p1), 64);
      BigReal tb = bp * pow_si(abs(tw).abs_upper(), 2 * p1 - k) /
                   BigReal::from_integer(factorial_int((unsigned long)(2 * p1 - k)), 64);
      // confirm the geometric ratio (N^2+2p) t^2 / ((2p+1-k)(2p+2-k)) <= 1/2
      double ratio = (double)(N * N + 2 * p1) * td * td /
                     ((double)(2 * p1 + 1 - k) * (double)(2 * p1 + 2 - k));
      if (ratio > 0.5)
        throw NonConvergenceError("mgf_value: tail ratio check failed");
      acc.add_error(mul_2exp(tb.abs_upper(), 1));
    }
    if (k == 0)
      out.value = BigComplex(acc.round_to(ctx.target_bits));
    else
      out.derivs.push_back(BigComplex(acc.round_to(ctx.target_bits)));
  }
  return out;
}

BigReal mgf_ode_residual(long N, const BigReal& t, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  TransformValue u = mgf_value(N, t, 4, ctx.inner());
  BigReal tw = t.round_to(w);
  BigReal t2 = tw * tw;
  const BigReal& u0 = u.value.re;
  const BigReal& u1 = u.derivs[0].re;
  const BigReal& u2 = u.derivs[1].re;
  const BigReal& u3 = u.derivs[2].re;
  const BigReal& u4 = u.derivs[3].re;
  BigReal res = mul_2exp(tw * u4, 1) - (mul_long(t2, 3) - BigReal::from_long(8, w)) * u3 +
                tw * (t2 - BigReal::from_long(4 * N + 13, w)) * u2 +
                (mul_long(t2, 3 * N + 2) - BigReal::from_long(8 * N + 8, w)) * u1 +
                mul_long(tw * u0, 2 * N * N + N);
  return res.round_to(ctx.target_bits);
}

TransformValue stieltjes_value(long N, const BigComplex& t, long k_derivs,
                               const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("stieltjes_value: N must be >= 2");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigComplex tw = t.round_to(w);
  double xd = std::ceil(std::sqrt(2.0 * (double)N) + 40.0);
  BigReal xmax = BigReal::from_double(xd, w);

  bool imag_ok = tw.im.definitely_nonzero();
  bool real_far = !imag_ok && mpfr_cmp_d(abs(tw.re).value(), xd) > 0;
  if (!imag_ok && !real_far)
    throw DomainError("stieltjes_value: t too close to the real axis inside the support");
  if (!imag_ok && k_derivs > 0)
    throw DomainError("stieltjes_value: derivatives require Im(t) != 0");

  TransformValue out;
  out.t = tw;
  BigReal tol = BigReal::two_pow(-(ctx.target_bits + 16), 64);

  // int_T^inf rho <= half of the 0-moment tail bound
  BigReal rho_tail = mul_2exp(density_tail_moment_bound(N, 0, xmax, 64), -1);

  for (long k = 0; k <= k_derivs; ++k) {
    Integer kf = factorial_int((unsigned long)k);
    BigReal kfb = BigReal::from_integer(kf, w);
    int sign = (k % 2 == 0) ? 1 : -1;
    auto f = [&](const BigReal& x) {
      BigComplex xm(x);
      BigComplex one = BigComplex::from_long(1, 0, w);
      BigComplex a = one / (tw - xm);
      BigComplex b = one / (tw + xm);
      BigComplex ak = a, bk = b;
      for (long j = 0; j < k; ++j) {
        ak = ak * a;
        bk = bk * b;
      }
      BigComplex kernel = ak + bk;
      BigReal r = rho_real(N, x, inner);
      BigComplex val = BigComplex(r * kfb) * kernel;
      if (sign < 0) val = -val;
      return val;
    };
    BigComplex I = integrate_complex(f, BigReal::zero(w), xmax, w, tol);
    // tail bound
    BigReal tailb(64);
    if (imag_ok) {
      BigReal dist = tw.im.abs_lower();
      BigReal inv = BigReal::one(64) / dist;
      tailb = mul_2exp(kfb * pow_si(inv, k + 1) * rho_tail, 1);
    } else {
      // real |t| > xmax, value only: principal-value style bound
      BigReal ta = abs(tw.re);
      BigReal env = rho_envelope_bound(N, xmax, 64);
      BigReal denv = rho_deriv_envelope_bound(N, (ta - BigReal::one(w)).round_to(w), 64);
      tailb = mul_2exp(env * (ta - xmax + BigReal::from_long(2, 64)).abs_upper(), 1) +
              mul_2exp(denv, 1) + rho_tail;
    }
    I.re.add_error(tailb);
    I.im.add_error(tailb);
    if (k == 0)
      out.value = I.round_to(ctx.target_bits);
    else
      out.derivs.push_back(I.round_to(ctx.target_bits));
  }
  return out;
}

BigComplex stieltjes_ode_residual(long N, const BigComplex& t, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigComplex tw = t.round_to(w);
  TransformValue W = stieltjes_value(N, tw, 3, inner);
  const BigComplex& W1 = W.derivs[0];
  const BigComplex& W2 = W.derivs[1];
  const BigComplex& W3 = W.derivs[2];
  BigComplex t2 = tw * tw;
  BigComplex AW =
      t2 * W3 +
      tw * (BigComplex::from_long(3, 0, w) * t2 - BigComplex::from_long(3 * N - 4, 0, w)) * W2 +
      (BigComplex::from_long(2, 0, w) * t2 - BigComplex::from_long(2 * N - 1, 0, w)) *
          (t2 - BigComplex::from_long(N - 2, 0, w)) * W1;
  BigReal M0 = m0_hyp(N, inner).value;
  BigReal M2 = m2_hyp(N, inner).value;
  BigComplex rhs = (BigComplex::from_long(1 + 4 * N, 0, w) - BigComplex::from_long(2, 0, w) * t2) *
                       BigComplex(M0) -
                   BigComplex(mul_long(M2, 6));
  return (AW - rhs).round_to(ctx.target_bits);
}

}  // namespace ginoe
