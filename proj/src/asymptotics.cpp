#include "ginoe/asymptotics.hpp"

#include "ginoe/special.hpp"

namespace ginoe {

// ---------------------------------------------------------------------------
// q_s generating function and the a_l / b_l coefficient generators

TwoF1LargeC gauss_2f1_large_c_expansion(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& z, long m) {
  if (m < 1) throw DomainError("gauss_2f1_large_c_expansion: m must be >= 1");
  long order = m - 1;
  PowerSeries<Rational> base = ps_pow(ps_expm1_over_t(order), b - 1);
  PowerSeries<Rational> expf = ps_exp_qt(1 - c, order);
  // 1 - z + z e^{-t}
  PowerSeries<Rational> mix = ps_exp_qt(Rational(-1), order);
  mix = ps_scale(mix, z);
  mix[0] += 1 - z;  // constant term 1
  PowerSeries<Rational> g = ps_mul(ps_mul(base, expf), ps_pow(mix, -a));

  TwoF1LargeC out{a, b, c, z, {}, {}};
  out.q = g.coeffs;
  out.pochhammer_b.reserve(m);
  for (long s2 = 0; s2 < m; ++s2) out.pochhammer_b.push_back(pochhammer(b, (unsigned long)s2));
  return out;
}

namespace {

// Gamma(l - 1/2) / Gamma(-1/2) as an exact rational, l >= 1.
Rational gamma_half_ratio_m12(long l) {
  Rational r(1);
  // Gamma(l-1/2) = (l-3/2)(l-5/2)...(-1/2) Gamma(-1/2)
  for (long j = 0; j < l; ++j) r *= Rational(2 * j - 1, 2);
  return r;
}

// Gamma(l - 3/2) / Gamma(-3/2), l >= 1.
Rational gamma_half_ratio_m32(long l) {
  Rational r(1);
  for (long j = 0; j < l; ++j) r *= Rational(2 * j - 3, 2);
  return r;
}

}  // namespace

std::vector<Rational> a_coefficients(long m) {
  if (m < 2) throw DomainError("a_coefficients: m must be >= 2");
  long order = m - 1;
  // ((e^t-1)/t)^{-3/2} e^{2t} / (e^t + 1)
  PowerSeries<Rational> f = ps_pow(ps_expm1_over_t(order), Rational(-3, 2));
  f = ps_mul(f, ps_exp_qt(Rational(2), order));
  PowerSeries<Rational> den = ps_exp_qt(Rational(1), order);
  den[0] += 1;
  f = ps_div(f, den);
  // a_l = -(Gamma(l-1/2)/sqrt(pi)) * [t^l] f ; Gamma(l-1/2) = sqrt(pi) (2l-3)!!/2^{l-1}
  std::vector<Rational> a;
  a.reserve(m - 1);
  for (long l = 1; l < m; ++l) {
    Rational g = Rational(double_factorial(2 * l - 3)) / Rational(Integer(1) << (l - 1));
    a.push_back(-g * f[l]);
  }
  return a;
}

std::vector<Rational> b_coefficients(long m) {
  if (m < 2) throw DomainError("b_coefficients: m must be >= 2");
  long order = m - 1;
  // ((e^t-1)/t)^{-5/2} e^{2t} (e^t - 3) / (e^t + 1)^2
  PowerSeries<Rational> f = ps_pow(ps_expm1_over_t(order), Rational(-5, 2));
  f = ps_mul(f, ps_exp_qt(Rational(2), order));
  PowerSeries<Rational> et = ps_exp_qt(Rational(1), order);
  PowerSeries<Rational> num = et;
  num[0] -= 3;
  f = ps_mul(f, num);
  PowerSeries<Rational> den = et;
  den[0] += 1;
  den = ps_mul(den, den);
  f = ps_div(f, den);
  // b_l = -(1/2) (Gamma(l-3/2)/sqrt(pi)) * [t^l] f
  // Gamma(l-3/2)/sqrt(pi) = Gamma(l-3/2)/Gamma(1/2): l=1 -> -2, l=2 -> 1, then *(l-3/2)
  std::vector<Rational> b;
  b.reserve(m - 1);
  Rational g(-2);  // Gamma(-1/2)/Gamma(1/2)
  for (long l = 1; l < m; ++l) {
    if (l > 1) g *= Rational(2 * l - 5, 2);  // Gamma(l-3/2) = (l-5/2) Gamma(l-5/2)
    b.push_back(Rational(-1, 2) * g * f[l]);
  }
  return b;
}

// ---------------------------------------------------------------------------
// MGF expansion levels

DiffOp mgf_operator_d0() {
  return DiffOp::from_terms({{Poly::monomial(Rational(2), 1), 4},
                             {Poly::constant(Rational(8)), 3},
                             {Poly::monomial(Rational(-4), 1), 2},
                             {Poly::constant(Rational(-8)), 1},
                             {Poly::monomial(Rational(2), 1), 0}});
}

DiffOp mgf_operator_d1() {
  return DiffOp::from_terms({{Poly::monomial(Rational(-3), 2), 3},
                             {Poly::monomial(Rational(-13), 1), 2},
                             {Poly({Rational(-8), Rational(0), Rational(3)}), 1},
                             {Poly::monomial(Rational(1), 1), 0}});
}

DiffOp mgf_operator_d2() {
  return DiffOp::from_terms({{Poly::monomial(Rational(1), 3), 2},
                             {Poly::monomial(Rational(2), 2), 1}});
}

Rational SinhCoshPoly::deriv2p_at_zero(long p) const {
  // coefficient of t^{2p} in R sinh + S cosh + s sinh(t)/t, times (2p)!
  Poly R = sinh_coeff(), S = cosh_coeff();
  Rational coeff(0);
  // R odd: R = sum r_j t^j (j odd); sinh = sum t^{2i+1}/(2i+1)!
  for (long j = 1; j <= R.degree(); j += 2) {
    long rem = 2 * p - j;  // needs t^{rem} from sinh, rem odd >= 1
    if (rem >= 1)
      coeff += R.coeff(j) / Rational(factorial_int((unsigned long)rem));
  }
  for (long j = 0; j <= S.degree(); j += 2) {
    long rem = 2 * p - j;
    if (rem >= 0)
      coeff += S.coeff(j) / Rational(factorial_int((unsigned long)rem));
  }
  if (s != 0) coeff += s / Rational(factorial_int((unsigned long)(2 * p + 1)));
  return coeff * Rational(factorial_int((unsigned long)(2 * p)));
}

BigReal SinhCoshPoly::eval(const BigReal& t, const PrecisionContext& ctx) const {
  long w = ctx.working_bits();
  BigReal tv = t.round_to(w);
  BigReal sh = sinh(tv), ch = cosh(tv);
  BigReal out = sinh_coeff().eval(tv) * sh + cosh_coeff().eval(tv) * ch;
  if (s != 0) {
    if (!tv.definitely_nonzero())
      throw DomainError("SinhCoshPoly::eval: sinh(t)/t term at t not certified nonzero");
    out += BigReal::from_rational(s, w) * sh / tv;
  }
  if (prefactor_sqrt_2_over_pi) out = out * sqrt_2_over_pi(ctx.inner());
  return out.round_to(ctx.target_bits);
}

namespace {

// Solve D0[R sinh + S cosh] = rhs for R odd / S even with degree bound, then
// pin the cosh kernel direction by S(0) = pin.  The solve must leave exactly
// the S(0) column free.
PolyPair solve_level(const PolyPair& rhs, long degbound, const Rational& pin) {
  std::vector<long> rdegs, sdegs;
  for (long j = 1; j <= degbound + 1; j += 2) rdegs.push_back(j);
  for (long j = 0; j <= degbound; j += 2) sdegs.push_back(j);
  size_t nunk = rdegs.size() + sdegs.size();

  DiffOp d0 = mgf_operator_d0();
  // build columns: image of each basis monomial under D0
  std::vector<PolyPair> images;
  images.reserve(nunk);
  for (long j : rdegs) images.push_back(d0.apply({Poly::monomial(Rational(1), j), Poly{}}));
  for (long j : sdegs) images.push_back(d0.apply({Poly{}, Poly::monomial(Rational(1), j)}));

  long maxdeg = 0;
  for (const auto& im : images) maxdeg = std::max({maxdeg, im.R.degree(), im.S.degree()});
  maxdeg = std::max({maxdeg, rhs.R.degree(), rhs.S.degree()});

  // rows: sinh coefficient of t^d, then cosh coefficient of t^d
  std::vector<std::vector<Rational>> rows;
  for (long d = 0; d <= maxdeg; ++d) {
    std::vector<Rational> rowR(nunk + 1, Rational(0)), rowS(nunk + 1, Rational(0));
    for (size_t u = 0; u < nunk; ++u) {
      rowR[u] = images[u].R.coeff(d);
      rowS[u] = images[u].S.coeff(d);
    }
    rowR[nunk] = rhs.R.coeff(d);
    rowS[nunk] = rhs.S.coeff(d);
    rows.push_back(std::move(rowR));
    rows.push_back(std::move(rowS));
  }

  LinearSolution sol = solve_exact(std::move(rows), nunk);
  size_t s0_col = rdegs.size();  // S column for degree 0
  if (sol.free_columns.size() != 1 || sol.free_columns[0] != s0_col)
    throw InternalInconsistencyError(
        "mgf_expansion_levels: kernel is not the cosh direction");

  std::vector<Rational> x = sol.particular;  // free S(0) set to 0
  Rational shift = pin - x[s0_col];
  std::vector<Rational> kern = sol.kernel_for(s0_col);
  for (size_t i = 0; i < x.size(); ++i) x[i] += shift * kern[i];

  Poly R, S;
  for (size_t i = 0; i < rdegs.size(); ++i)
    R = R + Poly::monomial(x[i], (size_t)rdegs[i]);
  for (size_t i = 0; i < sdegs.size(); ++i)
    S = S + Poly::monomial(x[rdegs.size() + i], (size_t)sdegs[i]);
  return {R, S};
}

SinhCoshPoly make_level(const PolyPair& pp, bool half, bool pref) {
  SinhCoshPoly out;
  out.half = half;
  out.prefactor_sqrt_2_over_pi = pref;
  if (half) {
    // value = A t cosh + B sinh: cosh coeff = t A, sinh coeff = B
    Poly coshc = pp.S;
    if (!coshc.is_zero() && coshc.coeff(0) != 0)
      throw InternalInconsistencyError("half level cosh coefficient lacks a t factor");
    std::vector<Rational> ac(coshc.c.begin() + (coshc.is_zero() ? 0 : 1), coshc.c.end());
    out.A = Poly(std::move(ac));
    out.B = pp.R;
    if (!out.A.is_odd() || !out.B.is_odd())
      throw InternalInconsistencyError("half level parity violated");
  } else {
    Poly sinhc = pp.R;
    if (!sinhc.is_zero() && sinhc.coeff(0) != 0)
      throw InternalInconsistencyError("integer level sinh coefficient lacks a t factor");
    std::vector<Rational> ac(sinhc.is_zero() ? std::vector<Rational>{}
                                             : std::vector<Rational>(sinhc.c.begin() + 1,
                                                                     sinhc.c.end()));
    out.A = Poly(std::move(ac));
    out.B = pp.S;
    if (!out.A.is_even() || !out.B.is_even())
      throw InternalInconsistencyError("integer level parity violated");
  }
  return out;
}

}  // namespace

MgfLevels mgf_expansion_levels(long k_max) {
  if (k_max < 0) throw DomainError("mgf_expansion_levels: k_max must be >= 0");
  // a_k pins the integer-level kernel; b_k is asserted afterwards.
  std::vector<Rational> a = a_coefficients(k_max + 2);
  std::vector<Rational> b = b_coefficients(k_max + 2);

  DiffOp d1 = mgf_operator_d1();
  DiffOp d2 = mgf_operator_d2();

  MgfLevels out;
  // integer chain, prefactor sqrt(2/pi) divided out: level 0 = sinh(t)/t
  std::vector<PolyPair> G(k_max + 1, PolyPair{Poly{}, Poly{}});
  SinhCoshPoly l0;
  l0.s = 1;
  l0.half = false;
  out.integer_levels.push_back(l0);
  for (long k = 1; k <= k_max; ++k) {
    // rhs = -D1 G_{k-1} - D2 G_{k-2}, with closed rules on the sinh/t part:
    //   D1[sinh/t] = -6 sinh,  D2[sinh/t] = t^2 sinh,  D0[sinh/t] = 0
    PolyPair rhs{Poly{}, Poly{}};
    if (k == 1) {
      rhs.R = Poly::constant(Rational(6));  // -D1[sinh/t]
    } else {
      PolyPair m1 = d1.apply(G[k - 1]);
      rhs = rhs - m1;
      if (k == 2) {
        rhs.R = rhs.R - Poly::monomial(Rational(1), 2);  // -D2[sinh/t]
      } else {
        rhs = rhs - d2.apply(G[k - 2]);
      }
    }
    long degbound = std::max(k + 2, 2 * k);
    G[k] = solve_level(rhs, degbound, a[(size_t)k - 1]);
    SinhCoshPoly lev = make_level(G[k], false, true);
    if (lev.value_at_zero() != a[(size_t)k - 1])
      throw InternalInconsistencyError("mgf level value(0) does not match a_k");
    if (lev.second_deriv_at_zero() != b[(size_t)k - 1])
      throw InternalInconsistencyError(
          "mgf level second derivative at 0 does not match b_k (ODE route vs 2F1 route)");
    out.integer_levels.push_back(lev);
  }

  // half-integer chain, prefactor 1: level 1/2 = cosh(t)/2
  std::vector<PolyPair> H(k_max + 1, PolyPair{Poly{}, Poly{}});
  H[0] = PolyPair{Poly{}, Poly::constant(Rational(1, 2))};
  SinhCoshPoly h0;
  h0.half = true;
  h0.prefactor_sqrt_2_over_pi = false;
  h0.c0 = Rational(1, 2);  // the base level is the bare cosh(t)/2
  out.half_levels.push_back(h0);
  for (long k = 1; k <= k_max; ++k) {
    PolyPair rhs{Poly{}, Poly{}};
    rhs = rhs - d1.apply(H[k - 1]);
    if (k >= 2) rhs = rhs - d2.apply(H[k - 2]);
    long degbound = std::max(k + 2, 2 * k) + 1;
    H[k] = solve_level(rhs, degbound, Rational(0));
    SinhCoshPoly lev = make_level(H[k], true, false);
    // vanishing moments: d^{2j}/dt^{2j} at 0 vanish for j <= k
    for (long j = 0; j <= k; ++j)
      if (lev.deriv2p_at_zero(j) != 0)
        throw InternalInconsistencyError("half level nonzero low-order derivative at 0");
    out.half_levels.push_back(lev);
  }
  return out;
}

// ---------------------------------------------------------------------------

MomentAsymptotic moment_asymptotic(long N, long p, long m, const MgfLevels& levels,
                                   const PrecisionContext& ctx) {
  if (p < 0) throw DomainError("moment_asymptotic: p must be >= 0");
  if (m < 1) throw DomainError("moment_asymptotic: m must be >= 1");
  if ((long)levels.integer_levels.size() < m || (long)levels.half_levels.size() < m)
    throw DomainError("moment_asymptotic: requested order exceeds computed levels");

  AsymptoticSeries s;
  s.p = p;
  // half-power: level l contributes sqrt(2/pi) * N^{1/2-l} * deriv2p(level l)
  // where deriv2p already excludes the sqrt(2/pi) prefactor.
  for (long l = 0; l < m; ++l)
    s.half_power_coeffs.push_back(levels.integer_levels[(size_t)l].deriv2p_at_zero(p));
  // integer-power: level l+1/2 contributes N^{-l} * deriv2p(level l+1/2);
  // l = 0 gives the constant 1/2; the tail terminates at l = p-1.
  for (long l = 0; l < m; ++l) {
    Rational c = levels.half_levels[(size_t)l].deriv2p_at_zero(p);
    if (l >= p && l >= 1 && c != 0)
      throw InternalInconsistencyError(
          "moment_asymptotic: c-tail fails to terminate at l = p-1");
    s.int_power_coeffs.push_back(c);
  }

  long w = ctx.working_bits();
  BigReal Nb = BigReal::from_long(N, w);
  BigReal invN = BigReal::one(w) / Nb;
  BigReal acc = BigReal::zero(w), powN = BigReal::one(w);
  for (long l = 0; l < m; ++l) {
    acc += BigReal::from_rational(s.half_power_coeffs[(size_t)l], w) * powN;
    powN = powN * invN;
  }
  BigReal val = sqrt(mul_2exp(Nb, 1) / BigReal::pi(w)) * acc;  // sqrt(2N/pi) * sum
  powN = BigReal::one(w);
  for (long l = 0; l < m; ++l) {
    val += BigReal::from_rational(s.int_power_coeffs[(size_t)l], w) * powN;
    powN = powN * invN;
  }
  // scale back from N^{-p} M_2p to M_2p
  val = val * pow_si(Nb, p);
  MomentAsymptotic out{std::move(s), val.round_to(ctx.target_bits)};
  return out;
}

DensityCorrection density_correction_polynomials(const MgfLevels& levels, long twice_level) {
  DensityCorrection out;
  if (twice_level == 0) {
    out.uniform_slab = true;
    out.slab_mass = Rational(2);  // times 1/sqrt(2 pi): mass 2/sqrt(2 pi)
    out.polys = levels.integer_levels.at(0);
    return out;
  }
  if (twice_level == 1) {
    out.endpoint_atoms = true;
    out.atom_weight = Rational(1, 4);
    out.polys = levels.half_levels.at(0);
    return out;
  }
  if (twice_level % 2 == 0)
    out.polys = levels.integer_levels.at((size_t)(twice_level / 2));
  else
    out.polys = levels.half_levels.at((size_t)(twice_level / 2));
  return out;
}

}  // namespace ginoe
