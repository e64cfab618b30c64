#include "ginoe/moments.hpp"

#include <cmath>

#include "ginoe/density.hpp"
#include "ginoe/hyp.hpp"
#include "ginoe/quadrature.hpp"
#include "ginoe/recognize.hpp"
#include "ginoe/special.hpp"

namespace ginoe {

Integer trace_moment(long N, long p) {
  if (N < 1) throw DomainError("trace_moment: N must be >= 1");
  if (p < 1) throw DomainError("trace_moment: p must be >= 1");
  Integer r(1);
  for (long j = 0; j < p; ++j) r *= Integer(N + 2 * j);
  return r;
}

namespace {

constexpr long kExactPrefactorMaxN = 60;

bool is_exact_integer(const BigReal& p) { return p.exact() && p.is_integer_value(); }

bool is_exact_half_integer(const BigReal& p) {
  if (!p.exact()) return false;
  BigReal two_p = mul_2exp(p, 1);
  return two_p.is_integer_value() && !p.is_integer_value();
}

// 3F2(1, -1/2-p, 1/2+p; 1/2, 3/2-N-p; 1/2)
BigReal hyp3f2_for_moment(long N, const BigReal& p, long w, const PrecisionContext& ctx) {
  HypParams hp;
  BigReal half = BigReal::from_rational(Rational(1, 2), w);
  hp.numer = {BigComplex(BigReal::one(w)), BigComplex(-half - p), BigComplex(half + p)};
  hp.denom = {BigComplex(half),
              BigComplex(BigReal::from_rational(Rational(3, 2), w) - BigReal::from_long(N, w) - p)};
  hp.z = BigComplex(half);
  return hyp_pfq(hp, ctx).re;
}

BigComplex hyp3f2_for_moment_c(long N, const BigComplex& p, long w,
                               const PrecisionContext& ctx) {
  HypParams hp;
  BigComplex half = BigComplex::from_rational(Rational(1, 2), Rational(0), w);
  BigComplex one = BigComplex::from_long(1, 0, w);
  hp.numer = {one, -half - p, half + p};
  hp.denom = {half, BigComplex::from_rational(Rational(3, 2), Rational(0), w) -
                        BigComplex::from_long(N, 0, w) - p};
  hp.z = half;
  return hyp_pfq(hp, ctx);
}

// Gamma(N + p - 1/2) = sqrt(pi) * (2(N+p) - 3)!! / 2^{N+p-1} for integer p:
// rational part of the exact prefactor sqrt(2) R / ((2p+1) (N-2)!).
Rational exact_prefactor_rational(long N, long p) {
  Rational R = Rational(double_factorial(2 * (N + p) - 3)) /
               Rational(Integer(1) << (N + p - 1));
  return R / (Rational(2 * p + 1) * Rational(factorial_int(N - 2)));
}

// 2^p Gamma(p + N/2) / Gamma(N/2) = prod_{j<p} (N + 2j), exact for integer p.
Integer parity_term_integer(long N, long p) {
  Integer r(1);
  for (long j = 0; j < p; ++j) r *= Integer(N + 2 * j);
  return r;
}

BigReal moment_real_impl(long N, const BigReal& p, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal pw = p.round_to(w);

  if (N == 1) {
    // 1x1 GinOE is a standard normal scalar: M_2p = 2^p Gamma(p+1/2)/Gamma(1/2)
    BigReal g = gamma_fn(pw + BigReal::from_rational(Rational(1, 2), w), inner);
    BigReal sp = sqrt(BigReal::pi(w));
    BigReal two_p = exp(pw * log(BigReal::from_long(2, w)));
    return two_p * g / sp;
  }

  BigReal F = hyp3f2_for_moment(N, pw, w, inner);
  BigReal out(w);
  if (is_exact_integer(pw) && pw.sign_value() >= 0 && N <= kExactPrefactorMaxN) {
    long pi_ = pw.to_long();
    out = BigReal::from_rational(exact_prefactor_rational(N, pi_), w) *
          sqrt(BigReal::from_long(2, w)) * F;
    if (N % 2 == 1) out += BigReal::from_integer(parity_term_integer(N, pi_), w);
  } else {
    // log-gamma space for the Gamma ratio
    BigReal lg = lngamma_fn(pw + BigReal::from_rational(Rational(2 * N - 1, 2), w) -
                                BigReal::one(w),
                            inner);  // Gamma(N + p - 1/2)
    BigReal lf = lngamma_fn(BigReal::from_long(N - 1, w), inner);  // (N-2)!
    BigReal pref = exp(lg - lf);
    BigReal inv_sqrt_2pi = BigReal::one(w) / sqrt(mul_2exp(BigReal::pi(w), 1));
    out = inv_sqrt_2pi * mul_2exp(pref, 1) / (mul_2exp(pw, 1) + BigReal::one(w)) * F;
    if (N % 2 == 1) {
      BigReal lg2 = lngamma_fn(pw + BigReal::from_rational(rat(N, 2), w), inner) -
                    lngamma_fn(BigReal::from_rational(rat(N, 2), w), inner);
      out += exp(pw * log(BigReal::from_long(2, w)) + lg2);
    }
  }
  return out;
}

}  // namespace

MomentValue moment_real(long N, const BigReal& p, const PrecisionContext& ctx) {
  if (N < 1) throw DomainError("moment_real: N must be >= 1");
  BigReal half = BigReal::from_rational(Rational(1, 2), 64);
  if (!(p + half).definitely_positive())
    throw DomainError("moment_real: requires Re(p) > -1/2");
  if (is_exact_half_integer(p))
    throw IndeterminateParamsError(
        "moment_real: half-integer p makes the 3F2 parameters indeterminate; "
        "use moment_real_halfint");
  MomentValue mv;
  mv.value = moment_real_impl(N, p, ctx).round_to(ctx.target_bits);
  mv.method = MomentValue::Method::hypergeometric;
  return mv;
}

MomentValue moment_real(long N, long p, const PrecisionContext& ctx) {
  return moment_real(N, BigReal::from_long(p, ctx.working_bits()), ctx);
}

BigComplex moment_real_complex(long N, const BigComplex& p, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("moment_real_complex: N must be >= 2");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigComplex pw = p.round_to(w);
  BigReal half_r = BigReal::from_rational(Rational(1, 2), 64);
  if (!(pw.re + half_r).definitely_positive())
    throw DomainError("moment_real_complex: requires Re(p) > -1/2");

  BigComplex F = hyp3f2_for_moment_c(N, pw, w, inner);
  // (1/sqrt(2pi)) (2/(2p+1)) Gamma(N+p-1/2)/(N-2)! F
  BigComplex g = gamma_fn(pw + BigComplex::from_rational(Rational(2 * N - 3, 2), Rational(0), w),
                          inner);
  BigReal inv_sqrt_2pi = BigReal::one(w) / sqrt(mul_2exp(BigReal::pi(w), 1));
  BigComplex two_p_plus1 = pw + pw + BigComplex::from_long(1, 0, w);
  BigComplex out = BigComplex(inv_sqrt_2pi) * BigComplex::from_long(2, 0, w) / two_p_plus1 * g *
                   F / BigComplex(BigReal::from_integer(factorial_int(N - 2), w));
  if (N % 2 == 1) {
    BigComplex gn = gamma_fn(pw + BigComplex::from_rational(rat(N, 2), Rational(0), w),
                             inner) /
                    BigComplex(gamma_fn(BigReal::from_rational(rat(N, 2), w), inner));
    BigComplex two_p = exp(pw * BigComplex(log(BigReal::from_long(2, w))));
    out += two_p * gn;
  }
  return out.round_to(ctx.target_bits);
}

MomentValue moment_real_halfint(long N, long q, const PrecisionContext& ctx) {
  if (q < 0) throw DomainError("moment_real_halfint: q must be >= 0");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  long eps_exp = -(ctx.target_bits / 3);
  BigReal p0 = BigReal::from_rational(Rational(2 * q + 1, 2), w);
  auto avg = [&](long ee) {
    BigReal eps = BigReal::two_pow(ee, w);
    BigReal up = moment_real_impl(N, p0 + eps, inner);
    BigReal dn = moment_real_impl(N, p0 - eps, inner);
    return mul_2exp(up + dn, -1);
  };
  BigReal A1 = avg(eps_exp);
  BigReal A2 = avg(eps_exp - 1);
  BigReal rich = div_long(mul_2exp(A2, 2) - A1, 3);
  BigReal defect = abs(A2 - A1);
  // stability gate: the epsilon pair must agree at coarse scale
  BigReal scale = max_value(abs(rich), BigReal::one(w));
  if (cmp_value(defect, mul_2exp(scale, -(ctx.target_bits / 4))) > 0)
    throw NonConvergenceError("moment_real_halfint: extrapolation unstable");
  rich.add_error(defect);
  MomentValue mv;
  mv.value = rich.round_to(ctx.target_bits);
  mv.method = MomentValue::Method::hypergeometric;
  return mv;
}

MomentValue moment_complex_eigs(long N, long p, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("moment_complex_eigs: N must be >= 2");
  if (p < 1) throw DomainError("moment_complex_eigs: p must be >= 1");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal pw = BigReal::from_long(p, w);
  BigReal F = hyp3f2_for_moment(N, pw, w, inner);
  BigReal out(w);
  if (N <= kExactPrefactorMaxN) {
    out = -(BigReal::from_rational(exact_prefactor_rational(N, p), w) *
            sqrt(BigReal::from_long(2, w)) * F);
  } else {
    BigReal lg = lngamma_fn(BigReal::from_rational(Rational(2 * (N + p) - 3, 2), w), inner);
    BigReal lf = lngamma_fn(BigReal::from_long(N - 1, w), inner);
    BigReal inv_sqrt_2pi = BigReal::one(w) / sqrt(mul_2exp(BigReal::pi(w), 1));
    out = -(inv_sqrt_2pi * mul_2exp(exp(lg - lf), 1) / BigReal::from_long(2 * p + 1, w) * F);
  }
  if (N % 2 == 0) out += BigReal::from_integer(parity_term_integer(N, p), w);
  MomentValue mv;
  mv.value = out.round_to(ctx.target_bits);
  mv.method = MomentValue::Method::hypergeometric;
  return mv;
}

Sqrt2Rational m0_exact(long N) {
  if (N < 1) throw DomainError("m0_exact: N must be >= 1");
  if (N == 1) return {Rational(1), Rational(0)};
  if (N % 2 == 1) {
    Rational s(0);
    for (long k = 1; k <= (N - 1) / 2; ++k)
      s += Rational(double_factorial(4 * k - 3)) / Rational(double_factorial(4 * k - 2));
    return {Rational(1), s};
  }
  Rational s(0);
  for (long k = 0; k <= N / 2 - 1; ++k)
    s += Rational(double_factorial(4 * k - 1)) / Rational(double_factorial(4 * k));
  return {Rational(0), s};
}

MomentValue m0_hyp(long N, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("m0_hyp: N must be >= 2");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  // sqrt(2/pi) Gamma(N+1/2)/(N-1)! = sqrt(2) (2N-1)!!/(2^N (N-1)!)
  Rational pref = Rational(double_factorial(2 * N - 1)) /
                  (Rational(Integer(1) << N) * Rational(factorial_int(N - 1)));
  BigReal F = hyp_pfq_real({Rational(1), Rational(-1, 2)}, {Rational(N)}, Rational(1, 2), inner);
  BigReal out = BigReal::from_rational(Rational(1, 2), w) +
                BigReal::from_rational(pref, w) * sqrt(BigReal::from_long(2, w)) * F;
  MomentValue mv;
  mv.value = out.round_to(ctx.target_bits);
  mv.method = MomentValue::Method::hypergeometric;
  return mv;
}

MomentValue m2_hyp(long N, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("m2_hyp: N must be >= 2");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  // sqrt(2/pi) Gamma(N+3/2)/(N-1)! = sqrt(2) (2N+1)!!/(2^{N+1} (N-1)!)
  Rational pref = Rational(double_factorial(2 * N + 1)) /
                  (Rational(Integer(1) << (N + 1)) * Rational(factorial_int(N - 1)));
  BigReal F1 = hyp_pfq_real({Rational(2), Rational(-1, 2)}, {Rational(N + 1)}, Rational(1, 2),
                            inner);
  BigReal F2 = hyp_pfq_real({Rational(1), Rational(-3, 2)}, {Rational(N)}, Rational(1, 2),
                            inner);
  BigReal inner_sum = div_long(F1, 2 * N) + div_long(F2, 3);
  BigReal out = BigReal::from_rational(pref, w) * sqrt(BigReal::from_long(2, w)) * inner_sum +
                BigReal::from_rational(rat(N, 2), w);
  MomentValue mv;
  mv.value = out.round_to(ctx.target_bits);
  mv.method = MomentValue::Method::hypergeometric;
  return mv;
}

std::vector<MomentValue> moment_sequence_recurrence(long N, long p_max, const MomentValue& M0,
                                                    const MomentValue& M2) {
  if (p_max < 2) throw DomainError("moment_sequence_recurrence: p_max must be >= 2");
  std::vector<MomentValue> out(p_max + 1);
  out[0] = M0;
  out[1] = M2;
  out[0].method = MomentValue::Method::recurrence;
  out[1].method = MomentValue::Method::recurrence;
  long w = std::max(M0.value.prec(), M2.value.prec());
  for (long p = 2; p <= p_max; ++p) {
    BigReal t1 = mul_long(out[p - 1].value, (2 * p - 1) * (6 * p + 4 * N - 5));
    BigReal t2 = mul_long(out[p - 2].value, (2 * p - 3) * (2 * p + N - 4));
    t2 = mul_long(t2, 2 * p + 2 * N - 3);
    MomentValue mv;
    mv.value = div_long(t1 - t2, 2 * (2 * p + 1)).round_to(w);
    mv.method = MomentValue::Method::recurrence;
    mv.recognized_not_proven = M2.recognized_not_proven;
    out[p] = mv;
  }
  return out;
}

std::vector<Sqrt2Rational> moment_sequence_recurrence_exact(long N, long p_max,
                                                            const Sqrt2Rational& M0,
                                                            const Sqrt2Rational& M2) {
  if (p_max < 2) throw DomainError("moment_sequence_recurrence: p_max must be >= 2");
  std::vector<Sqrt2Rational> out(p_max + 1);
  out[0] = M0;
  out[1] = M2;
  for (long p = 2; p <= p_max; ++p) {
    Rational c1((2 * p - 1) * (6 * p + 4 * N - 5));
    Rational c2(Integer((2 * p - 3)) * Integer(2 * p + N - 4) * Integer(2 * p + 2 * N - 3));
    Sqrt2Rational num = c1 * out[p - 1] - c2 * out[p - 2];
    out[p] = Rational(1, 2 * (2 * p + 1)) * num;
  }
  return out;
}

std::optional<Sqrt2Rational> m2_exact_recognized(long N) {
  PrecisionContext c512(512, 64);
  BigReal m2 = moment_real_impl(N, BigReal::from_long(1, c512.working_bits()), c512);
  auto cand = recognize_sqrt2(m2.round_to(512));
  if (!cand) return std::nullopt;
  // verify against a 1024-bit evaluation
  PrecisionContext c1024(1024, 64);
  BigReal hi = moment_real_impl(N, BigReal::from_long(1, c1024.working_bits()), c1024);
  BigReal cv = BigReal::from_rational(cand->a, 1088) +
               BigReal::from_rational(cand->b, 1088) * sqrt(BigReal::from_long(2, 1088));
  BigReal dev = abs(cv - hi);
  BigReal tol = hi.err_as_value() + mul_2exp(max_value(abs(hi), BigReal::one(64)), -960);
  if (cmp_value(dev, tol) > 0) return std::nullopt;
  return cand;
}

BigReal hyp3f2_contiguous_residual(long N, const BigComplex& p, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigComplex pw = p.round_to(w);
  BigComplex one = BigComplex::from_long(1, 0, w);
  BigComplex two = BigComplex::from_long(2, 0, w);
  auto F = [&](long shift) {
    return hyp3f2_for_moment_c(N, pw + BigComplex::from_long(shift, 0, w), w, inner);
  };
  BigComplex twoNp = BigComplex::from_long(2 * N, 0, w) + two * pw;
  BigComplex lhs = (twoNp - one) * (twoNp + one) * F(2);
  // (6p + 4N + 7)(2N + 2p - 1) F1 - 2 (2p + N)(2N + 2p + 1) F0
  BigComplex c1 = (BigComplex::from_long(6, 0, w) * pw + BigComplex::from_long(4 * N + 7, 0, w)) *
                  (twoNp - one);
  BigComplex c2 = two * (two * pw + BigComplex::from_long(N, 0, w)) * (twoNp + one);
  BigComplex rhs = c1 * F(1) - c2 * F(0);
  return abs(lhs - rhs).round_to(ctx.target_bits);
}

BigComplex moment_recurrence_residual_complex(long N, const BigComplex& p,
                                              const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigComplex pw = p.round_to(w);
  BigComplex one = BigComplex::from_long(1, 0, w);
  BigComplex two = BigComplex::from_long(2, 0, w);
  BigComplex Mp = moment_real_complex(N, pw, inner);
  BigComplex Mm1 = moment_real_complex(N, pw - one, inner);
  BigComplex Mm2 = moment_real_complex(N, pw - two, inner);
  BigComplex twop = two * pw;
  BigComplex r = two * (twop + one) * Mp -
                 ((twop - one) *
                      (BigComplex::from_long(6, 0, w) * pw +
                       BigComplex::from_long(4 * N - 5, 0, w)) *
                      Mm1 -
                  (twop - BigComplex::from_long(3, 0, w)) *
                      (twop + BigComplex::from_long(N - 4, 0, w)) *
                      (twop + BigComplex::from_long(2 * N - 3, 0, w)) * Mm2);
  return r.round_to(ctx.target_bits);
}

MomentValue moment_real_quadrature(long N, const BigReal& p, const PrecisionContext& ctx) {
  if (N < 2) throw DomainError("moment_real_quadrature: N must be >= 2");
  BigReal half = BigReal::from_rational(Rational(1, 2), 64);
  if (!(p + half).definitely_positive())
    throw DomainError("moment_real_quadrature: requires p > -1/2");
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal pw = p.round_to(w);
  double xd = std::sqrt(2.0 * (double)N) + 40.0;
  BigReal xmax = BigReal::from_double(std::ceil(xd), w);

  // truncation budget relative to a coarse scale estimate O((N+2p)^p)
  BigReal tol = BigReal::two_pow(-(ctx.target_bits + 16), 64);
  double pd = pw.to_double();
  double mag = std::pow((double)N + 2.0 * std::max(0.0, pd), std::max(0.0, pd));
  tol = tol * BigReal::from_double(std::max(1.0, mag), 64);

  BigReal result(w);
  if (is_exact_integer(pw) && pw.sign_value() >= 0) {
    long pi_ = pw.to_long();
    auto f = [&](const BigReal& x) { return pow_si(x, 2 * pi_) * rho_real(N, x, inner); };
    result = mul_2exp(integrate(f, BigReal::zero(w), xmax, w, tol), 1);
    result.add_error(density_tail_moment_bound(N, 2 * pi_, xmax, 64));
  } else {
    // substitute x = u^s (even s) so that u^{s(2p+1)-1} rho(u^s) is regular at 0
    long s = 2;
    double need = 1.0 / (2.0 * pd + 1.0);
    while ((double)s < need && s < 4096) s *= 2;
    BigReal umax = exp(log(xmax) / BigReal::from_long(s, w));
    auto f = [&](const BigReal& u) {
      BigReal x = pow_si(u, s);
      BigReal expo = mul_2exp(pw, 1) * BigReal::from_long(s, w) +
                     BigReal::from_long(s - 1, w);  // s(2p) + s - 1
      return pow(u, expo) * rho_real(N, x, inner);
    };
    result = mul_long(integrate(f, BigReal::zero(w), umax, w, tol), 2 * s);
    long xpow = (long)std::ceil(2.0 * pd);
    if (xpow < 0) xpow = 0;
    result.add_error(density_tail_moment_bound(N, xpow, xmax, 64));
  }
  MomentValue mv;
  mv.value = result.round_to(ctx.target_bits);
  mv.method = MomentValue::Method::quadrature;
  return mv;
}

}  // namespace ginoe
