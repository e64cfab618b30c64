#include "ginoe/stieltjes_series.hpp"

#include <sstream>

#include "ginoe/asymptotics.hpp"
#include "ginoe/special.hpp"

namespace ginoe {

bool RatFun::is_zero() const {
  if (!poly.is_zero()) return false;
  for (const auto& q : rm)
    if (q != 0) return false;
  for (const auto& q : rp)
    if (q != 0) return false;
  return true;
}

namespace {
void trim_res(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) {
  RatFun out;
  out.poly = a.poly + b.poly;
  out.rm.assign(std::max(a.rm.size(), b.rm.size()), Rational(0));
  out.rp.assign(std::max(a.rp.size(), b.rp.size()), Rational(0));
  for (size_t j = 0; j < a.rm.size(); ++j) out.rm[j] += a.rm[j];
  for (size_t j = 0; j < b.rm.size(); ++j) out.rm[j] += b.rm[j];
  for (size_t j = 0; j < a.rp.size(); ++j) out.rp[j] += a.rp[j];
  for (size_t j = 0; j < b.rp.size(); ++j) out.rp[j] += b.rp[j];
  trim_res(out.rm);
  trim_res(out.rp);
  return out;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + Rational(-1) * b; }

RatFun operator*(const Rational& s, const RatFun& a) {
  RatFun out = a;
  out.poly = s * out.poly;
  for (auto& q : out.rm) q *= s;
  for (auto& q : out.rp) q *= s;
  return out;
}

RatFun RatFun::derivative() const {
  RatFun out;
  out.poly = poly.derivative();
  out.rm.assign(rm.size() + 1, Rational(0));
  out.rp.assign(rp.size() + 1, Rational(0));
  for (size_t j = 1; j <= rm.size(); ++j) out.rm[j] = Rational(-(long)j) * rm[j - 1];
  for (size_t j = 1; j <= rp.size(); ++j) out.rp[j] = Rational(-(long)j) * rp[j - 1];
  trim_res(out.rm);
  trim_res(out.rp);
  return out;
}

RatFun RatFun::mul_t() const {
  // t/(t-1)^j = 1/(t-1)^{j-1} + 1/(t-1)^j  (j >= 1; j=1 leaves a constant)
  RatFun out;
  out.poly = poly.shift_up(1);
  out.rm.assign(rm.size(), Rational(0));
  out.rp.assign(rp.size(), Rational(0));
  for (size_t j = 1; j <= rm.size(); ++j) {
    Rational q = rm[j - 1];
    out.rm[j - 1] += q;
    if (j == 1)
      out.poly = out.poly + Poly::constant(q);
    else
      out.rm[j - 2] += q;
  }
  for (size_t j = 1; j <= rp.size(); ++j) {
    // t/(t+1)^j = 1/(t+1)^{j-1} - 1/(t+1)^j
    Rational q = rp[j - 1];
    out.rp[j - 1] -= q;
    if (j == 1)
      out.poly = out.poly + Poly::constant(q);
    else
      out.rp[j - 2] += q;
  }
  trim_res(out.rm);
  trim_res(out.rp);
  return out;
}

RatFun RatFun::mul_poly(const Poly& p) const {
  RatFun acc;
  RatFun powed = *this;
  for (long k = 0; k <= p.degree(); ++k) {
    if (p.coeff((size_t)k) != 0) acc = acc + p.coeff((size_t)k) * powed;
    if (k < p.degree()) powed = powed.mul_t();
  }
  return acc;
}

Rational RatFun::coeff_at_infinity(long j) const {
  // 1/(t-1)^m = sum_{i>=0} C(m+i-1, i) t^{-m-i};  1/(t+1)^m alternates sign.
  Rational out(0);
  for (size_t m = 1; m <= rm.size(); ++m) {
    long i = j - (long)m;
    if (i < 0) continue;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)(m + i - 1), (unsigned long)i);
    out += rm[m - 1] * Rational(binom);
  }
  for (size_t m = 1; m <= rp.size(); ++m) {
    long i = j - (long)m;
    if (i < 0) continue;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)(m + i - 1), (unsigned long)i);
    Rational term = rp[m - 1] * Rational(binom);
    if (i % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

BigComplex RatFun::eval(const BigComplex& t) const {
  long w = t.prec();
  BigComplex out(w);
  for (size_t k = poly.c.size(); k-- > 0;)
    out = out * t + BigComplex::from_rational(poly.coeff(k), Rational(0), w);
  BigComplex one = BigComplex::from_long(1, 0, w);
  if (!rm.empty()) {
    BigComplex inv = one / (t - one), p = inv;
    for (size_t j = 1; j <= rm.size(); ++j) {
      out = out + BigReal::from_rational(rm[j - 1], w) * p;
      p = p * inv;
    }
  }
  if (!rp.empty()) {
    BigComplex inv = one / (t + one), p = inv;
    for (size_t j = 1; j <= rp.size(); ++j) {
      out = out + BigReal::from_rational(rp[j - 1], w) * p;
      p = p * inv;
    }
  }
  return out;
}

std::string RatFun::str() const {
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k <= poly.degree(); ++k) {
    if (poly.coeff((size_t)k) == 0) continue;
    if (!first) os << " + ";
    os << "(" << poly.coeff((size_t)k).get_str() << ")t^" << k;
    first = false;
  }
  for (size_t j = 1; j <= rm.size(); ++j) {
    if (rm[j - 1] == 0) continue;
    if (!first) os << " + ";
    os << "(" << rm[j - 1].get_str() << ")/(t-1)^" << j;
    first = false;
  }
  for (size_t j = 1; j <= rp.size(); ++j) {
    if (rp[j - 1] == 0) continue;
    if (!first) os << " + ";
    os << "(" << rp[j - 1].get_str() << ")/(t+1)^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RatFun partial_fractions(const Poly& P, long m, long n) {
  if (m < 0 || n < 0) throw DomainError("partial_fractions: negative pole orders");
  RatFun out;
  if (P.is_zero()) return out;
  // polynomial part: degree reduction happens naturally through the Taylor
  // expansions; compute it as P/(den) quotient via the residue-complement.
  // residues at t=1: Taylor coefficients of P(1+u)/(u+2)^n around u=0
  Poly rem = P;
  if (m > 0) {
    Poly shifted = P.taylor_shift(Rational(1));  // P(1+u)
    // (u+2)^{-n} = 2^{-n} sum_i C(-n, i) (u/2)^i
    std::vector<Rational> inv(m, Rational(0));
    Rational c = Rational(1) / Rational(Integer(1) << n);
    inv[0] = c;
    for (long i = 1; i < m; ++i) {
      c = c * Rational(-n - i + 1) / Rational(i) / 2;
      inv[(size_t)i] = c;
    }
    out.rm.assign((size_t)m, Rational(0));
    for (long i = 0; i < m; ++i) {
      Rational acc(0);
      for (long j = 0; j <= i; ++j) acc += shifted.coeff((size_t)j) * inv[(size_t)(i - j)];
      out.rm[(size_t)(m - i - 1)] = acc;  // coefficient of (t-1)^{i-m}
    }
  }
  if (n > 0) {
    Poly shifted = P.taylor_shift(Rational(-1));  // P(-1+u)
    // (u-2)^{-m} = (-2)^{-m} sum_i C(-m, i) (-u/2)^i
    std::vector<Rational> inv((size_t)n, Rational(0));
    Rational c = Rational(1) / Rational(Integer(1) << m);
    if (m % 2 == 1) c = -c;
    inv[0] = c;
    for (long i = 1; i < n; ++i) {
      c = c * Rational(-m - i + 1) / Rational(i) / Rational(-2);
      inv[(size_t)i] = c;
    }
    out.rp.assign((size_t)n, Rational(0));
    for (long i = 0; i < n; ++i) {
      Rational acc(0);
      for (long j = 0; j <= i; ++j) acc += shifted.coeff((size_t)j) * inv[(size_t)(i - j)];
      out.rp[(size_t)(n - i - 1)] = acc;
    }
  }
  trim_res(out.rm);
  trim_res(out.rp);
  // polynomial part: P/den - PF-part has no poles; reconstruct by subtracting
  // the PF terms multiplied back over the common denominator.
  Poly den_m = Poly::constant(Rational(1));
  Poly tm1({Rational(-1), Rational(1)});
  Poly tp1({Rational(1), Rational(1)});
  for (long j = 0; j < m; ++j) den_m = den_m * tm1;
  Poly den_n = Poly::constant(Rational(1));
  for (long j = 0; j < n; ++j) den_n = den_n * tp1;
  Poly num_back;
  for (size_t j = 1; j <= out.rm.size(); ++j) {
    Poly t1pow = Poly::constant(out.rm[j - 1]);
    for (long i2 = 0; i2 < m - (long)j; ++i2) t1pow = t1pow * tm1;
    num_back = num_back + t1pow * den_n;
  }
  for (size_t j = 1; j <= out.rp.size(); ++j) {
    Poly t2pow = Poly::constant(out.rp[j - 1]);
    for (long i2 = 0; i2 < n - (long)j; ++i2) t2pow = t2pow * tp1;
    num_back = num_back + t2pow * den_m;
  }
  Poly diff = P - num_back;
  // diff must be divisible by den_m * den_n; exact polynomial division
  Poly den = den_m * den_n;
  if (den.degree() == 0) {
    out.poly = Rational(1) / den.coeff(0) * diff;
    return out;
  }
  Poly quot;
  while (diff.degree() >= den.degree()) {
    long d = diff.degree() - den.degree();
    Rational f = diff.coeff((size_t)diff.degree()) / den.coeff((size_t)den.degree());
    quot = quot + Poly::monomial(f, (size_t)d);
    diff = diff - (Poly::monomial(f, (size_t)d) * den);
  }
  if (!diff.is_zero())
    throw InternalInconsistencyError("partial_fractions: nonzero remainder");
  out.poly = quot;
  return out;
}

// ---------------------------------------------------------------------------

DiffOp stieltjes_operator_d0() {
  // 2 (t^2-1)^2 d/dt
  Poly t2m1({Rational(-1), Rational(0), Rational(1)});
  return DiffOp::from_terms({{Rational(2) * (t2m1 * t2m1), 1}});
}

DiffOp stieltjes_operator_d1() {
  Poly t2m1({Rational(-1), Rational(0), Rational(1)});
  return DiffOp::from_terms(
      {{t2m1 * Poly::monomial(Rational(3), 1), 2}, {Rational(5) * t2m1, 1}});
}

DiffOp stieltjes_operator_d2() {
  return DiffOp::from_terms({{Poly::monomial(Rational(1), 2), 3},
                             {Poly::monomial(Rational(4), 1), 2},
                             {Poly::constant(Rational(2)), 1}});
}

namespace {

// Apply an operator (all of whose terms carry at least one derivative) to a
// level; the log part differentiates into the rational world.
RatFun apply_to_level(const DiffOp& op, const StieltjesLevel& lev) {
  // first derivative of the level
  RatFun d1 = lev.rational_part.derivative();
  if (lev.log_coeff != 0) {
    // d/dt log((t+1)/(t-1)) = 1/(t+1) - 1/(t-1)
    RatFun logd;
    logd.rm = {-lev.log_coeff};
    logd.rp = {lev.log_coeff};
    d1 = d1 + logd;
  }
  RatFun out;
  std::vector<RatFun> derivs{d1};
  for (size_t k = 1; k < op.coeff.size(); ++k) {
    if (k >= 2) derivs.push_back(derivs.back().derivative());
  }
  for (size_t k = 1; k < op.coeff.size(); ++k) {
    if (op.coeff[k].is_zero()) continue;
    out = out + derivs[k - 1].mul_poly(op.coeff[k]);
  }
  if (!op.coeff.empty() && !op.coeff[0].is_zero())
    throw InternalInconsistencyError("apply_to_level: operator has a derivative-free term");
  return out;
}

// Antidifferentiate rhs / (2 (t^2-1)^2) with the integration constant pinned
// by decay at infinity; returns the level (log coefficient + rational part).
StieltjesLevel antidifferentiate_level(const RatFun& rhs) {
  // convert to numerator over (t-1)^m (t+1)^n, then add (2,2) to the powers
  long m = (long)rhs.rm.size(), n = (long)rhs.rp.size();
  Poly tm1({Rational(-1), Rational(1)}), tp1({Rational(1), Rational(1)});
  Poly den_m = Poly::constant(Rational(1)), den_n = Poly::constant(Rational(1));
  for (long j = 0; j < m; ++j) den_m = den_m * tm1;
  for (long j = 0; j < n; ++j) den_n = den_n * tp1;
  Poly numer = rhs.poly * den_m * den_n;
  for (size_t j = 1; j <= rhs.rm.size(); ++j) {
    Poly p = Poly::constant(rhs.rm[j - 1]);
    for (long i = 0; i < m - (long)j; ++i) p = p * tm1;
    numer = numer + p * den_n;
  }
  for (size_t j = 1; j <= rhs.rp.size(); ++j) {
    Poly p = Poly::constant(rhs.rp[j - 1]);
    for (long i = 0; i < n - (long)j; ++i) p = p * tp1;
    numer = numer + p * den_m;
  }
  RatFun integrand = partial_fractions(Rational(1, 2) * numer, m + 2, n + 2);

  if (!integrand.poly.is_zero())
    throw InternalInconsistencyError(
        "stieltjes_expansion_levels: non-decaying polynomial part in W' ");

  StieltjesLevel out;
  // antidifferentiate: 1/(t-1)^j -> (t-1)^{1-j}/(1-j) for j >= 2; j=1 -> log
  Rational log_m(0), log_p(0);
  if (!integrand.rm.empty()) log_m = integrand.rm[0];
  if (!integrand.rp.empty()) log_p = integrand.rp[0];
  out.rational_part.rm.assign(integrand.rm.size() > 1 ? integrand.rm.size() - 1 : 0,
                              Rational(0));
  for (size_t j = 2; j <= integrand.rm.size(); ++j)
    out.rational_part.rm[j - 2] = integrand.rm[j - 1] / Rational(1 - (long)j);
  out.rational_part.rp.assign(integrand.rp.size() > 1 ? integrand.rp.size() - 1 : 0,
                              Rational(0));
  for (size_t j = 2; j <= integrand.rp.size(); ++j)
    out.rational_part.rp[j - 2] = integrand.rp[j - 1] / Rational(1 - (long)j);
  trim_res(out.rational_part.rm);
  trim_res(out.rational_part.rp);

  // log terms: a log(t-1) + b log(t+1) decays only if b = -a, giving
  // -a log((t+1)/(t-1)); anything else is an inconsistency.
  if (log_m + log_p != 0)
    throw InternalInconsistencyError(
        "stieltjes_expansion_levels: log terms do not combine into log((t+1)/(t-1))");
  out.log_coeff = -log_m;
  // integration constant: all basis terms already decay, constant must be 0.
  return out;
}

void check_level(const StieltjesLevel& lev, long k, bool half) {
  const RatFun& r = lev.rational_part;
  // oddness under t -> -t: residue at (t+1)^{-j} must equal (-1)^{j+1} *
  // residue at (t-1)^{-j}; log((t+1)/(t-1)) is odd automatically.
  size_t jmax = std::max(r.rm.size(), r.rp.size());
  for (size_t j = 1; j <= jmax; ++j) {
    Rational qm = j <= r.rm.size() ? r.rm[j - 1] : Rational(0);
    Rational qp = j <= r.rp.size() ? r.rp[j - 1] : Rational(0);
    Rational want = (j % 2 == 0) ? -qm : qm;
    if (qp != want)
      throw InternalInconsistencyError("stieltjes level fails oddness");
  }
  if (!r.poly.is_zero())
    throw InternalInconsistencyError("stieltjes level has a polynomial part");
  if (half) {
    // decay t^{-(2k+1)}: asymptotic coefficients of t^-1 .. t^-2k vanish
    for (long j = 1; j <= 2 * k; ++j)
      if (r.coeff_at_infinity(j) != 0 || (j == 1 && lev.log_coeff != 0))
        throw InternalInconsistencyError("half stieltjes level decays too slowly");
    if (lev.log_coeff != 0)
      throw InternalInconsistencyError("half stieltjes level carries a log term");
  }
}

}  // namespace

StieltjesLevels stieltjes_expansion_levels(long k_max) {
  if (k_max < 0) throw DomainError("stieltjes_expansion_levels: k_max must be >= 0");
  std::vector<Rational> a = a_coefficients(k_max + 2);
  std::vector<Rational> b = b_coefficients(k_max + 2);
  DiffOp d1 = stieltjes_operator_d1();
  DiffOp d2 = stieltjes_operator_d2();

  StieltjesLevels out;
  // integer chain (prefactor sqrt(2/pi) divided out), RHS:
  //   l = 0: 2 - 2 t^2 ; l >= 1: (4 - 2 t^2) a_l + a_{l-1} - 6 b_l
  for (long k = 0; k <= k_max; ++k) {
    RatFun rhs;
    if (k == 0) {
      rhs.poly = Poly({Rational(2), Rational(0), Rational(-2)});
    } else {
      Rational al = a[(size_t)k - 1];
      Rational alm1 = k >= 2 ? a[(size_t)k - 2] : Rational(1);  // a_0 = 1
      rhs.poly = Poly({Rational(4) * al + alm1 - 6 * b[(size_t)k - 1], Rational(0),
                       Rational(-2) * al});
    }
    if (k >= 1) rhs = rhs - apply_to_level(d1, out.integer_levels[(size_t)k - 1]);
    if (k >= 2) rhs = rhs - apply_to_level(d2, out.integer_levels[(size_t)k - 2]);
    StieltjesLevel lev = antidifferentiate_level(rhs);
    lev.half = false;
    lev.prefactor_sqrt_2_over_pi = true;
    lev.index = k;
    if (k >= 1 && lev.log_coeff != 0)
      throw InternalInconsistencyError("integer stieltjes level >= 1 carries a log term");
    check_level(lev, k, false);
    out.integer_levels.push_back(lev);
  }
  // half chain (prefactor 1), RHS: k=0: -(t^2+1); k=1: 1/2; else 0
  for (long k = 0; k <= k_max; ++k) {
    RatFun rhs;
    if (k == 0)
      rhs.poly = Poly({Rational(-1), Rational(0), Rational(-1)});
    else if (k == 1)
      rhs.poly = Poly::constant(Rational(1, 2));
    if (k >= 1) rhs = rhs - apply_to_level(d1, out.half_levels[(size_t)k - 1]);
    if (k >= 2) rhs = rhs - apply_to_level(d2, out.half_levels[(size_t)k - 2]);
    StieltjesLevel lev = antidifferentiate_level(rhs);
    lev.half = true;
    lev.prefactor_sqrt_2_over_pi = false;
    lev.index = k;
    check_level(lev, k, true);
    out.half_levels.push_back(lev);
  }
  return out;
}

BigComplex StieltjesLevel::eval(const BigComplex& t, const PrecisionContext& ctx) const {
  long w = ctx.working_bits();
  BigComplex tw = t.round_to(w);
  BigComplex out = rational_part.eval(tw);
  if (log_coeff != 0) {
    BigComplex one = BigComplex::from_long(1, 0, w);
    out = out + BigReal::from_rational(log_coeff, w) * log((tw + one) / (tw - one));
  }
  if (prefactor_sqrt_2_over_pi) out = BigComplex(sqrt_2_over_pi(ctx.inner())) * out;
  return out.round_to(ctx.target_bits);
}

}  // namespace ginoe
