#include "ginoe/density.hpp"

#include <vector>

#include "ginoe/quadrature.hpp"
#include "ginoe/series.hpp"
#include "ginoe/special.hpp"

namespace ginoe {

namespace {

void require_N(long N) {
  if (N < 2) throw DomainError("density: requires N >= 2 (the formula contains (N-2)!)");
}

// 1 / (sqrt(2 pi) (N-2)!)
BigReal norm_const(long N, long w) {
  BigReal c = sqrt(mul_2exp(BigReal::pi(w), 1));
  return BigReal::one(w) / (c * BigReal::from_integer(factorial_int(N - 2), w));
}

// 2^{(N-3)/2}, exact for odd N, sqrt(2)-multiple otherwise
BigReal half_power_of_two(long N, long w) {
  long e = N - 3;
  if (e % 2 == 0) return BigReal::two_pow(e / 2, w);
  // e odd: 2^{e/2} = sqrt(2) * 2^{(e-1)/2}, and (e-1) is even
  return mul_2exp(sqrt(BigReal::from_long(2, w)), (e - 1) / 2);
}

BigReal gamma_lower_half(long N, const BigReal& u, const PrecisionContext& inner) {
  // gamma((N-1)/2, u)
  BigReal a = BigReal::from_rational(rat(N - 1, 2), inner.working_bits());
  return lower_incomplete_gamma(a, u, inner);
}

// Even Taylor data of the density around 0:
// rho(x) = C ((N-2)! + x^{2N-2} sum_k d_k x^{2k}),
// d_k = -s1_k + (1/2) (e^{-u/2} S2)_k with |d_k| <= (3/2)/k!.
std::vector<Rational> density_taylor_coeffs(long N, long M) {
  long m2 = N - 1;  // 2m where m = (N-1)/2
  std::vector<Rational> s1((size_t)M + 1), s2((size_t)M + 1);
  Rational kfac(1);
  Rational half_pow(1);
  for (long k = 0; k <= M; ++k) {
    if (k > 0) kfac *= k;
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    s1[(size_t)k] = sign / (kfac * Rational(N - 1 + k));
    // (-1/2)^k / (k! (m+k)) with m = (N-1)/2: 1/(m+k) = 2/(2k + N - 1)
    s2[(size_t)k] = sign * half_pow * Rational(2) / (kfac * Rational(2 * k + m2));
    half_pow /= 2;
  }
  PowerSeries<Rational> S2(std::move(s2));
  PowerSeries<Rational> emu = ps_exp_qt(Rational(-1, 2), M);  // e^{-u/2}
  PowerSeries<Rational> prod = ps_mul(emu, S2);
  std::vector<Rational> d((size_t)M + 1);
  for (long k = 0; k <= M; ++k) d[(size_t)k] = -s1[(size_t)k] + prod[(size_t)k] / 2;
  return d;
}

// derivatives 0..3 of C (Gamma(N-1) + sum_k d_k x^{2N-2+2k}) at |x| < 1/32
DensityDerivs derivs_by_series(long N, const BigReal& x, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  // |x| <= 2^-5: tail after M terms ~ 2^{-10(M+1)}; cover w bits
  long M = w / 10 + 4;
  std::vector<Rational> d = density_taylor_coeffs(N, M);
  BigReal C = norm_const(N, w);
  BigReal xw = x.round_to(w);
  std::vector<BigReal> out;
  for (int j = 0; j <= 3; ++j) {
    BigReal acc = BigReal::zero(w);
    for (long k = M; k >= 0; --k) {
      long q = 2 * N - 2 + 2 * k;
      if (q - j < 0) continue;
      Integer fall(1);
      for (int i = 0; i < j; ++i) fall *= (q - i);
      acc += BigReal::from_rational(Rational(fall) * d[(size_t)k], w) * pow_si(xw, q - j);
    }
    // tail: sum_{k>M} |d_k| q^j |x|^{q-j} with |d_k| <= (3/2)/k!, |x| <= 2^-5
    BigReal tail = BigReal::from_rational(Rational(3, 2), 64);
    long q1 = 2 * N + 2 * M;  // first omitted power
    BigReal qj = pow_si(BigReal::from_long(q1 + 2, 64), j);
    tail = tail * qj * pow_si(BigReal::two_pow(-5, 64), q1 - j);
    tail = tail / BigReal::from_integer(factorial_int((unsigned long)M + 1), 64);
    tail = mul_2exp(tail, 1);  // geometric slack for k > M+1
    acc.add_error(tail);
    if (j == 0) acc += BigReal::from_integer(factorial_int(N - 2), w);
    out.push_back(C * acc);
  }
  return {out[0], out[1], out[2], out[3]};
}

}  // namespace

BigReal rho_real(long N, const BigReal& x, const PrecisionContext& ctx) {
  require_N(N);
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal xw = abs(x.round_to(w));
  BigReal u = xw * xw;
  BigReal t1 = upper_incomplete_gamma(BigReal::from_long(N - 1, w), u, inner);
  BigReal t2 = half_power_of_two(N, w) * exp(-mul_2exp(u, -1)) * pow_si(xw, N - 1) *
               gamma_lower_half(N, mul_2exp(u, -1), inner);
  return (norm_const(N, w) * (t1 + t2)).round_to(ctx.target_bits);
}

BigReal rho_complex(long N, const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  require_N(N);
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal xw = x.round_to(w), yw = abs(y.round_to(w));
  if (yw.is_zero_value() && yw.exact()) return BigReal::zero(ctx.target_bits);
  BigReal r2 = xw * xw + yw * yw;
  BigReal g = upper_incomplete_gamma(BigReal::from_long(N - 1, w), r2, inner);
  BigReal pre = sqrt_2_over_pi(inner) * yw * erfc_fn(sqrt(BigReal::from_long(2, w)) * yw, inner) *
                exp(mul_2exp(yw * yw, 1));
  BigReal out = pre * g / BigReal::from_integer(factorial_int(N - 2), w);
  return out.round_to(ctx.target_bits);
}

DensityDerivs rho_real_derivatives(long N, const BigReal& x, const PrecisionContext& ctx) {
  require_N(N);
  long w = ctx.working_bits();
  PrecisionContext inner = ctx.inner();
  BigReal xa = abs(x.round_to(w));
  bool negative = x.sign_value() < 0;

  DensityDerivs dd{BigReal::zero(w), BigReal::zero(w), BigReal::zero(w), BigReal::zero(w)};
  if (mpfr_cmp_d(xa.value(), 1.0 / 32) < 0) {
    dd = derivs_by_series(N, xa, ctx);
  } else {
    BigReal u = xa * xa;
    BigReal a = pow_si(xa, 2 * N - 3) * exp(-u);
    BigReal b = half_power_of_two(N, w) * exp(-mul_2exp(u, -1)) * pow_si(xa, N - 2) *
                gamma_lower_half(N, mul_2exp(u, -1), inner);
    BigReal C = norm_const(N, w);
    BigReal inv = BigReal::one(w) / xa;
    BigReal Nb1 = BigReal::from_long(N - 1, w);
    // f  = -a + (N-1-x^2) b
    BigReal f = -a + (Nb1 - u) * b;
    // f' = (x - (N-2)/x) a + (x^3 - (2N-1)x + (N-1)(N-2)/x) b
    BigReal fp = (xa - mul_long(inv, N - 2)) * a +
                 (pow_si(xa, 3) - mul_long(xa, 2 * N - 1) + mul_long(inv, (N - 1) * (N - 2))) * b;
    // f'' = (-x^2 + (2N-5) - (N-2)(N-3)/x^2) a
    //     + (-x^4 + 3N x^2 - 3(N-1)^2 + (N-1)(N-2)(N-3)/x^2) b
    BigReal inv2 = inv * inv;
    BigReal fpp = (-u + BigReal::from_long(2 * N - 5, w) - mul_long(inv2, (N - 2) * (N - 3))) * a +
                  (-pow_si(xa, 4) + mul_long(u, 3 * N) - BigReal::from_long(3 * (N - 1) * (N - 1), w) +
                   mul_long(inv2, (N - 1) * (N - 2) * (N - 3))) *
                      b;
    dd.rho = rho_real(N, xa, ctx.inner());
    dd.d1 = C * f;
    dd.d2 = C * fp;
    dd.d3 = C * fpp;
  }
  if (negative) {
    dd.d1 = -dd.d1;
    dd.d3 = -dd.d3;
  }
  return {dd.rho.round_to(ctx.target_bits), dd.d1.round_to(ctx.target_bits),
          dd.d2.round_to(ctx.target_bits), dd.d3.round_to(ctx.target_bits)};
}

BigReal ode_residual_density(long N, const BigReal& x, const PrecisionContext& ctx) {
  require_N(N);
  long w = ctx.working_bits();
  DensityDerivs dd = rho_real_derivatives(N, x, ctx.inner());
  BigReal xw = x.round_to(w);
  BigReal u = xw * xw;
  BigReal res = u * dd.d3 + xw * (mul_long(u, 3) - BigReal::from_long(3 * N - 4, w)) * dd.d2 +
                (mul_2exp(u, 1) - BigReal::from_long(2 * N - 1, w)) *
                    (u - BigReal::from_long(N - 2, w)) * dd.d1;
  return res.round_to(ctx.target_bits);
}

BigReal rho_via_generating_function(long N, const BigReal& x, const PrecisionContext& ctx,
                                    long n_max) {
  require_N(N);
  if (N > n_max)
    throw DomainError("rho_via_generating_function: truncation-order overflow (N > N_max)");
  long w = ctx.working_bits();
  long K = N + 1;  // z-series length needed to read off coefficient N
  BigReal xa = abs(x.round_to(w));
  BigReal u = xa * xa;
  BigReal inv_sqrt2pi = BigReal::one(w) / sqrt(mul_2exp(BigReal::pi(w), 1));

  std::vector<BigReal> c((size_t)K, BigReal::zero(w));
  // z e^{-x^2/2} / sqrt(2 pi)
  if (K > 1) c[1] += inv_sqrt2pi * exp(-mul_2exp(u, -1));
  // z^2/(1-z) e^{(z-1)x^2} / sqrt(2 pi): coeff of z^m is e^{-x^2} sum_{j<=m-2} x^{2j}/j!
  {
    BigReal pref = inv_sqrt2pi * exp(-u);
    BigReal partial = BigReal::zero(w);
    BigReal term = BigReal::one(w);
    for (long m = 2; m < K; ++m) {
      partial += term;  // after adding j = m-2
      c[(size_t)m] += pref * partial;
      term = term * u / BigReal::from_long(m - 1, w);
    }
  }
  // (z^2 |x| / 2) e^{(z^2-1)x^2/2} (erf(z|x|/sqrt2) + erf((1-z)|x|/sqrt2))
  {
    BigReal c1 = xa / sqrt(BigReal::from_long(2, w));
    BigReal two_over_sqrtpi = mul_2exp(BigReal::one(w) / sqrt(BigReal::pi(w)), 1);
    // ga[k]: coefficient of z^{2k} in e^{-x^2/2} e^{z^2 x^2/2}
    std::vector<BigReal> ga;
    {
      BigReal t = exp(-mul_2exp(u, -1));
      for (long k = 0; 2 * k < K; ++k) {
        ga.push_back(t);
        t = t * mul_2exp(u, -1) / BigReal::from_long(k + 1, w);
      }
    }
    // es[j]: coefficient of z^j in erf(z c1) + erf((1-z) c1)
    std::vector<BigReal> es((size_t)K, BigReal::zero(w));
    {
      // erf(z c1): odd series
      BigReal p = c1;
      for (long m = 0; 2 * m + 1 < K; ++m) {
        BigReal coef = two_over_sqrtpi * p /
                       (BigReal::from_integer(factorial_int(m), w) * BigReal::from_long(2 * m + 1, w));
        if (m % 2 == 1) coef = -coef;
        es[(size_t)(2 * m + 1)] += coef;
        p = p * c1 * c1;
      }
      // erf((1-z) c1): Taylor at c1; erf^{(j)}(v) = 2/sqrt(pi) (-1)^{j-1} H_{j-1}(v) e^{-v^2}
      es[0] += erf_fn(c1, ctx.inner());
      BigReal em = exp(-c1 * c1);
      BigReal Hprev = BigReal::zero(w), Hcur = BigReal::one(w);  // H_{-1} unused, H_0 = 1
      BigReal mc1j = -c1;                                        // (-c1)^j
      BigReal jfac = BigReal::one(w);
      for (long j = 1; j < K; ++j) {
        BigReal dj = two_over_sqrtpi * Hcur * em;
        if (j % 2 == 0) dj = -dj;  // (-1)^{j-1}
        es[(size_t)j] += dj * mc1j / jfac;
        // advance H: H_{j} = 2 v H_{j-1} - 2 (j-1) H_{j-2}
        BigReal Hnext = mul_2exp(c1 * Hcur, 1) - mul_long(Hprev, 2 * (j - 1));
        Hprev = Hcur;
        Hcur = Hnext;
        mc1j = mc1j * (-c1);
        jfac = jfac * BigReal::from_long(j + 1, w);
      }
    }
    // assemble: (z^2 |x|/2) * (sum_k ga[k] z^{2k}) * (sum_j es[j] z^j)
    BigReal half_x = mul_2exp(xa, -1);
    for (long k = 0; 2 * k + 2 < K; ++k)
      for (long j = 0; 2 + 2 * k + j < K; ++j)
        c[(size_t)(2 + 2 * k + j)] += half_x * ga[(size_t)k] * es[(size_t)j];
  }
  return c[(size_t)N].round_to(ctx.target_bits);
}

BigReal rho_envelope_bound(long N, const BigReal& x, long prec) {
  // valid for x >= sqrt(2N):  Gamma(N-1, x^2) <= 2 x^{2N-4} e^{-x^2},
  // gamma((N-1)/2, x^2/2) <= Gamma((N-1)/2)
  BigReal xv = x.round_to(prec);
  BigReal C = norm_const(N, prec);
  BigReal t1 = mul_2exp(pow_si(xv, 2 * N - 4) * exp(-(xv * xv)), 1);
  BigReal gm = gamma_fn(BigReal::from_rational(rat(N - 1, 2), prec),
                        PrecisionContext(prec, 32));
  BigReal t2 = half_power_of_two(N, prec) * gm * pow_si(xv, N - 1) *
               exp(-mul_2exp(xv * xv, -1));
  return (C * (t1 + t2)).abs_upper();
}

BigReal rho_deriv_envelope_bound(long N, const BigReal& x, long prec) {
  // |rho'| = C |f| <= C (a + (N-1+x^2) b) with the same bounds as above
  BigReal xv = x.round_to(prec);
  BigReal C = norm_const(N, prec);
  BigReal a = pow_si(xv, 2 * N - 3) * exp(-(xv * xv));
  BigReal gm = gamma_fn(BigReal::from_rational(rat(N - 1, 2), prec),
                        PrecisionContext(prec, 32));
  BigReal b = half_power_of_two(N, prec) * gm * pow_si(xv, N - 2) * exp(-mul_2exp(xv * xv, -1));
  BigReal out = C * (a + (BigReal::from_long(N - 1, prec) + xv * xv) * b);
  return out.abs_upper();
}

BigReal density_tail_moment_bound(long N, long xpow, const BigReal& T, long prec) {
  // 2 int_T^inf x^xpow rho(x) dx <= 2 C (2 G(xpow+2N-4, 1, T)
  //   + 2^{(N-3)/2} Gamma((N-1)/2) G(xpow+N-1, 1/2, T))
  BigReal C = norm_const(N, prec);
  BigReal one = BigReal::one(prec);
  BigReal half = BigReal::from_rational(Rational(1, 2), prec);
  BigReal g1 = gaussian_tail_bound(xpow + 2 * N - 4, one, T, prec);
  BigReal g2 = gaussian_tail_bound(xpow + N - 1, half, T, prec);
  BigReal gm = gamma_fn(BigReal::from_rational(rat(N - 1, 2), prec),
                        PrecisionContext(prec, 32));
  BigReal out = mul_2exp(C * (mul_2exp(g1, 1) + half_power_of_two(N, prec) * gm * g2), 1);
  return out.abs_upper();
}

}  // namespace ginoe
