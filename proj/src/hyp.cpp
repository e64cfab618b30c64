#include "ginoe/hyp.hpp"

#include <algorithm>
#include <cmath>

namespace ginoe {

namespace {

// If c is an exact nonpositive integer, return k0 = 1 - c, the index of the
// first term whose Pochhammer factor (c)_k vanishes; otherwise -1.
long truncation_index(const BigComplex& c) {
  if (!c.imag_is_zero()) return -1;
  if (!c.re.exact() || !c.re.is_integer_value()) return -1;
  if (c.re.sign_value() > 0) return -1;
  return 1 - c.re.to_long();
}

}  // namespace

BigComplex hyp_pfq(const HypParams& params, const PrecisionContext& ctx) {
  long w = ctx.working_bits();

  long kn = -1;  // first index killed by a numerator parameter
  for (const auto& c : params.numer) {
    long k0 = truncation_index(c);
    if (k0 >= 0 && (kn < 0 || k0 < kn)) kn = k0;
  }
  long kd = -1;  // first index killed by a denominator parameter
  for (const auto& d : params.denom) {
    long k0 = truncation_index(d);
    if (k0 >= 0 && (kd < 0 || k0 < kd)) kd = k0;
  }
  if (kd >= 0 && (kn < 0 || kn > kd))
    throw IndeterminateParamsError(
        "hyp_pfq: nonpositive-integer denominator parameter not terminated by a numerator "
        "parameter");

  const bool terminating = kn >= 0;
  double pabs = 0;
  for (const auto& c : params.numer) pabs = std::max(pabs, abs(c).to_double());
  for (const auto& d : params.denom) pabs = std::max(pabs, abs(d).to_double());
  long k_monitor = (long)(16.0 * (pabs + 1.0)) + 16;

  if (!terminating) {
    // geometric phase needs |z| (17/15)^q (17/16) <= 3/4 with q = #denom
    double zabs = abs(params.z).to_double();
    if (params.numer.size() > params.denom.size() + 1)
      throw NonConvergenceError("hyp_pfq: divergent series (p > q+1)");
    double factor = std::pow(17.0 / 15.0, (double)params.denom.size()) * (17.0 / 16.0);
    if (zabs * factor > 0.75)
      throw NonConvergenceError("hyp_pfq: argument outside the certified-convergence range");
  }

  BigComplex term = BigComplex::from_long(1, 0, w);
  BigComplex sum = term;
  BigComplex zw = params.z.round_to(w);
  long maxit = terminating ? kn : k_monitor + 8 * w + 1000;
  BigReal tail_target = BigReal::two_pow(-(w + 8), 64);

  for (long k = 0;; ++k) {
    if (terminating && k + 1 >= kn) break;
    if (k >= maxit) throw NonConvergenceError("hyp_pfq: iteration cap reached");
    BigComplex next = term;
    for (const auto& c : params.numer) next = next * (c + BigComplex::from_long(k, 0, w));
    for (const auto& d : params.denom) next = next / (d + BigComplex::from_long(k, 0, w));
    next = next * zw;
    next = next / BigComplex::from_long(k + 1, 0, w);
    term = next;
    sum += term;
    if (!terminating && k + 1 >= k_monitor) {
      // tail <= |term| * r/(1-r) with r = 3/4 from here on
      BigReal tb = mul_long(term.abs_upper(), 3);
      BigReal scale = max_value(sum.abs_upper(), BigReal::one(64));
      if (cmp_value(tb, tail_target * scale) <= 0) {
        sum.re.add_error(tb);
        sum.im.add_error(tb);
        break;
      }
    }
  }
  return sum.round_to(ctx.target_bits);
}

BigReal hyp_pfq_real(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                     const Rational& z, const PrecisionContext& ctx) {
  long w = ctx.working_bits();
  HypParams p;
  for (const auto& c : numer) p.numer.push_back(BigComplex::from_rational(c, Rational(0), w));
  for (const auto& d : denom) p.denom.push_back(BigComplex::from_rational(d, Rational(0), w));
  p.z = BigComplex::from_rational(z, Rational(0), w);
  return hyp_pfq(p, ctx).re;
}

}  // namespace ginoe
