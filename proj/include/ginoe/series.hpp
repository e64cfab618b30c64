#ifndef GINOE_SERIES_HPP
#define GINOE_SERIES_HPP

#include <vector>

#include "ginoe/bigreal.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

// Coefficient-arithmetic glue so the same truncated-series algorithms run
// over exact rationals (the default) and over BigReal (the numeric variant
// used by the generating-function oracle).  `proto` carries the precision
// for the BigReal case and is ignored for rationals.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_rational(const Rational&, const Rational& q) { return q; }
  static Rational div_long(const Rational& a, long n) { return a / Rational(n); }
  static Rational mul_long(const Rational& a, long n) { return a * Rational(n); }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
};

template <>
struct coeff_traits<BigReal> {
  static BigReal zero(const BigReal& proto) { return BigReal::zero(proto.prec()); }
  static BigReal one(const BigReal& proto) { return BigReal::one(proto.prec()); }
  static BigReal from_rational(const BigReal& proto, const Rational& q) {
    return BigReal::from_rational(q, proto.prec());
  }
  static BigReal div_long(const BigReal& a, long n) { return ginoe::div_long(a, n); }
  static BigReal mul_long(const BigReal& a, long n) { return ginoe::mul_long(a, n); }
  static bool is_zero(const BigReal& a) { return a.exact() && a.is_zero_value(); }
  static bool is_one(const BigReal& a) { return a.exact() && cmp_value_si(a, 1) == 0; }
};

// Truncated formal power series: coefficient of t^k is coeffs[k], truncation
// order (inclusive) is coeffs.size() - 1.  Arithmetic never claims
// coefficients beyond the shorter operand; rational instances are exact.
template <class C>
struct PowerSeries {
  std::vector<C> coeffs;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<C> c) : coeffs(std::move(c)) {}
  long order() const { return (long)coeffs.size() - 1; }
  const C& operator[](size_t k) const { return coeffs[k]; }
  C& operator[](size_t k) { return coeffs[k]; }

  static PowerSeries constant(const C& c0, long order) {
    using T = coeff_traits<C>;
    std::vector<C> v;
    v.reserve(order + 1);
    v.push_back(c0);
    for (long k = 1; k <= order; ++k) v.push_back(T::zero(c0));
    return PowerSeries(std::move(v));
  }
};

template <class C>
PowerSeries<C> ps_add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<C> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) out.push_back(a.coeffs[k] + b.coeffs[k]);
  return PowerSeries<C>(std::move(out));
}

template <class C>
PowerSeries<C> ps_sub(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<C> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) out.push_back(a.coeffs[k] - b.coeffs[k]);
  return PowerSeries<C>(std::move(out));
}

template <class C>
PowerSeries<C> ps_scale(const PowerSeries<C>& a, const C& s) {
  std::vector<C> out;
  out.reserve(a.coeffs.size());
  for (const auto& c : a.coeffs) out.push_back(c * s);
  return PowerSeries<C>(std::move(out));
}

// Cauchy product truncated to the shorter operand's order.
template <class C>
PowerSeries<C> ps_mul(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  using T = coeff_traits<C>;
  if (a.coeffs.empty() || b.coeffs.empty()) return PowerSeries<C>{};
  size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<C> out(n, T::zero(a.coeffs[0]));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n && j < b.coeffs.size(); ++j)
      if (i < a.coeffs.size()) out[i + j] = out[i + j] + a.coeffs[i] * b.coeffs[j];
  return PowerSeries<C>(std::move(out));
}

// Formal quotient; b must have nonzero constant term.
template <class C>
PowerSeries<C> ps_div(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  using T = coeff_traits<C>;
  if (b.coeffs.empty() || T::is_zero(b.coeffs[0]))
    throw DomainError("ps_div: divisor has zero constant term");
  size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<C> q(n, T::zero(b.coeffs[0]));
  for (size_t k = 0; k < n; ++k) {
    C acc = a.coeffs[k];
    for (size_t j = 0; j < k; ++j) acc = acc - q[j] * b.coeffs[k - j];
    q[k] = acc / b.coeffs[0];
  }
  return PowerSeries<C>(std::move(q));
}

// exp of a series with zero constant term: b_n = (1/n) sum_{k=1}^n k a_k b_{n-k}.
template <class C>
PowerSeries<C> ps_exp(const PowerSeries<C>& a) {
  using T = coeff_traits<C>;
  if (a.coeffs.empty()) return PowerSeries<C>{};
  if (!T::is_zero(a.coeffs[0]))
    throw DomainError("ps_exp: constant term must be zero");
  size_t n = a.coeffs.size();
  std::vector<C> b(n, T::zero(a.coeffs[0]));
  b[0] = T::one(a.coeffs[0]);
  for (size_t m = 1; m < n; ++m) {
    C acc = T::zero(a.coeffs[0]);
    for (size_t k = 1; k <= m; ++k)
      acc = acc + T::mul_long(a.coeffs[k] * b[m - k], (long)k);
    b[m] = T::div_long(acc, (long)m);
  }
  return PowerSeries<C>(std::move(b));
}

// log of a series with unit constant term: c_n = a_n - (1/n) sum_{k<n} k c_k a_{n-k}.
template <class C>
PowerSeries<C> ps_log(const PowerSeries<C>& a) {
  using T = coeff_traits<C>;
  if (a.coeffs.empty() || !T::is_one(a.coeffs[0]))
    throw DomainError("ps_log: constant term must be one");
  size_t n = a.coeffs.size();
  std::vector<C> c(n, T::zero(a.coeffs[0]));
  for (size_t m = 1; m < n; ++m) {
    C acc = T::zero(a.coeffs[0]);
    for (size_t k = 1; k < m; ++k)
      acc = acc + T::mul_long(c[k] * a.coeffs[m - k], (long)k);
    c[m] = a.coeffs[m] - T::div_long(acc, (long)m);
  }
  return PowerSeries<C>(std::move(c));
}

// a^r = exp(r log a) for rational r; a must have unit constant term.
template <class C>
PowerSeries<C> ps_pow(const PowerSeries<C>& a, const Rational& r) {
  using T = coeff_traits<C>;
  if (a.coeffs.empty() || !T::is_one(a.coeffs[0]))
    throw DomainError("ps_pow: constant term must be one");
  if (r == 0) return PowerSeries<C>::constant(T::one(a.coeffs[0]), a.order());
  PowerSeries<C> lg = ps_log(a);
  return ps_exp(ps_scale(lg, T::from_rational(a.coeffs[0], r)));
}

// (e^t - 1)/t truncated at `order`: coefficient of t^k is 1/(k+1)!.
inline PowerSeries<Rational> ps_expm1_over_t(long order) {
  if (order < 0) throw DomainError("ps_expm1_over_t: order must be >= 0");
  std::vector<Rational> c;
  c.reserve(order + 1);
  Rational f(1);
  for (long k = 0; k <= order; ++k) {
    f /= Rational(k + 1);  // after k steps: 1/(k+1)!
    c.push_back(f);
  }
  return PowerSeries<Rational>(std::move(c));
}

// e^{q t} truncated at `order` (rational q).
inline PowerSeries<Rational> ps_exp_qt(const Rational& q, long order) {
  std::vector<Rational> c;
  c.reserve(order + 1);
  Rational term(1);
  c.push_back(term);
  for (long k = 1; k <= order; ++k) {
    term = term * q / Rational(k);
    c.push_back(term);
  }
  return PowerSeries<Rational>(std::move(c));
}

}  // namespace ginoe

#endif
