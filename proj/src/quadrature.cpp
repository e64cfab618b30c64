#include "ginoe/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ginoe {

namespace {

std::map<std::pair<long, long>, GLRule> g_rules;
std::mutex g_rules_mu;

// P_n(x) and P_{n-1}(x) by the three-term recurrence, raw mpfr.
void legendre_pair(long n, const mpfr_t x, mpfr_t pn, mpfr_t pnm1, long prec) {
  mpfr_t p0, p1, tmp;
  mpfr_init2(p0, prec);
  mpfr_init2(p1, prec);
  mpfr_init2(tmp, prec);
  mpfr_set_ui(p0, 1, MPFR_RNDN);
  mpfr_set(p1, x, MPFR_RNDN);
  for (long k = 1; k < n; ++k) {
    // (k+1) p_{k+1} = (2k+1) x p_k - k p_{k-1}
    mpfr_mul(tmp, x, p1, MPFR_RNDN);
    mpfr_mul_si(tmp, tmp, 2 * k + 1, MPFR_RNDN);
    mpfr_mul_si(p0, p0, k, MPFR_RNDN);
    mpfr_sub(tmp, tmp, p0, MPFR_RNDN);
    mpfr_div_si(tmp, tmp, k + 1, MPFR_RNDN);
    mpfr_set(p0, p1, MPFR_RNDN);
    mpfr_set(p1, tmp, MPFR_RNDN);
  }
  mpfr_set(pn, p1, MPFR_RNDN);
  mpfr_set(pnm1, p0, MPFR_RNDN);
  mpfr_clears(p0, p1, tmp, (mpfr_ptr)0);
}

GLRule build_rule(long n, long prec) {
  long wp = prec + 64;
  GLRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  mpfr_t x, pn, pnm1, dp, step, x2;
  mpfr_inits2(wp, x, pn, pnm1, dp, step, x2, (mpfr_ptr)0);
  for (long i = 0; i < n; ++i) {
    double guess = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    mpfr_set_d(x, guess, MPFR_RNDN);
    for (int it = 0; it < 200; ++it) {
      legendre_pair(n, x, pn, pnm1, wp);
      // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
      mpfr_sqr(x2, x, MPFR_RNDN);
      mpfr_sub_ui(x2, x2, 1, MPFR_RNDN);
      mpfr_mul(dp, x, pn, MPFR_RNDN);
      mpfr_sub(dp, dp, pnm1, MPFR_RNDN);
      mpfr_mul_si(dp, dp, n, MPFR_RNDN);
      mpfr_div(dp, dp, x2, MPFR_RNDN);
      mpfr_div(step, pn, dp, MPFR_RNDN);
      mpfr_sub(x, x, step, MPFR_RNDN);
      if (mpfr_zero_p(step) || mpfr_get_exp(step) < -(prec + 24)) break;
    }
    // weight w = 2 / ((1 - x^2) P'_n(x)^2)
    legendre_pair(n, x, pn, pnm1, wp);
    mpfr_sqr(x2, x, MPFR_RNDN);
    mpfr_ui_sub(x2, 1, x2, MPFR_RNDN);
    mpfr_mul(dp, x, pn, MPFR_RNDN);
    mpfr_sub(dp, dp, pnm1, MPFR_RNDN);
    mpfr_mul_si(dp, dp, n, MPFR_RNDN);
    mpfr_div(dp, dp, x2, MPFR_RNDN);
    mpfr_sqr(dp, dp, MPFR_RNDN);
    mpfr_mul(dp, dp, x2, MPFR_RNDN);
    mpfr_ui_div(dp, 2, dp, MPFR_RNDN);

    BigReal node(prec);
    mpfr_set(node.mutable_value(), x, MPFR_RNDN);
    node.add_error_2exp(-(prec + 16));
    BigReal weight(prec);
    mpfr_set(weight.mutable_value(), dp, MPFR_RNDN);
    weight.add_error_2exp(-(prec + 16));
    rule.nodes.push_back(std::move(node));
    rule.weights.push_back(std::move(weight));
  }
  mpfr_clears(x, pn, pnm1, dp, step, x2, (mpfr_ptr)0);
  return rule;
}

}  // namespace

const GLRule& gl_rule(long n, long prec) {
  std::lock_guard<std::mutex> lk(g_rules_mu);
  auto key = std::make_pair(n, prec);
  auto it = g_rules.find(key);
  if (it == g_rules.end()) it = g_rules.emplace(key, build_rule(n, prec)).first;
  return it->second;
}

namespace {

template <class V>
V gl_panel(const std::function<V(const BigReal&)>& f, const BigReal& a, const BigReal& b,
           const GLRule& rule) {
  BigReal half = mul_2exp(b - a, -1);
  BigReal mid = mul_2exp(a + b, -1);
  V acc = f(mid + half * rule.nodes[0]);
  if constexpr (std::is_same_v<V, BigReal>) {
    acc = acc * rule.weights[0];
  } else {
    acc = rule.weights[0] * acc;
  }
  for (size_t i = 1; i < rule.nodes.size(); ++i) {
    BigReal x = mid + half * rule.nodes[i];
    V term = f(x);
    if constexpr (std::is_same_v<V, BigReal>) {
      acc += term * rule.weights[i];
    } else {
      acc += rule.weights[i] * term;
    }
  }
  if constexpr (std::is_same_v<V, BigReal>) {
    return acc * half;
  } else {
    return half * acc;
  }
}

BigReal value_dev(const BigReal& a, const BigReal& b) { return abs(a - b).abs_upper(); }
BigReal value_dev(const BigComplex& a, const BigComplex& b) { return abs(a - b).abs_upper(); }

void add_trunc(BigReal& v, const BigReal& est) { v.add_error(est); }
void add_trunc(BigComplex& v, const BigReal& est) {
  v.re.add_error(est);
  v.im.add_error(est);
}

template <class V>
V integrate_impl(const std::function<V(const BigReal&)>& f, const BigReal& a, const BigReal& b,
                 const BigReal& abs_tol, int depth, const GLRule& rule) {
  V whole = gl_panel<V>(f, a, b, rule);
  BigReal mid = mul_2exp(a + b, -1);
  V left = gl_panel<V>(f, a, mid, rule);
  V right = gl_panel<V>(f, mid, b, rule);
  V split = left + right;
  BigReal est = value_dev(whole, split);
  if (cmp_value(est, abs_tol) <= 0 || depth >= 48) {
    add_trunc(split, est);
    return split;
  }
  BigReal tol_half = mul_2exp(abs_tol, -1);
  V l = integrate_impl<V>(f, a, mid, tol_half, depth + 1, rule);
  V r = integrate_impl<V>(f, mid, b, tol_half, depth + 1, rule);
  return l + r;
}

long rule_size(long w) { return 20 + w / 6; }

}  // namespace

BigReal integrate(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                  const BigReal& b, long w, const BigReal& abs_tol) {
  const GLRule& rule = gl_rule(rule_size(w), w);
  return integrate_impl<BigReal>(f, a.round_to(w), b.round_to(w), abs_tol, 0, rule);
}

BigComplex integrate_complex(const std::function<BigComplex(const BigReal&)>& f,
                             const BigReal& a, const BigReal& b, long w,
                             const BigReal& abs_tol) {
  const GLRule& rule = gl_rule(rule_size(w), w);
  return integrate_impl<BigComplex>(f, a.round_to(w), b.round_to(w), abs_tol, 0, rule);
}

BigReal gaussian_tail_bound(long j, const BigReal& alpha, const BigReal& T, long prec) {
  // int_T^inf x^j e^{-a x^2} dx <= T^{j-1} e^{-a T^2} / a for a T^2 >= max(j, 1)
  BigReal check = alpha * T * T;
  if (cmp_value(check, BigReal::from_long(std::max(j, 1L), prec)) < 0)
    throw DomainError("gaussian_tail_bound: cutoff too small for the requested moment");
  BigReal num = pow_si(T, j - 1) * exp(-(alpha * T * T));
  return (num / alpha).abs_upper();
}

}  // namespace ginoe
