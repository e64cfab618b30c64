#ifndef GINOE_SPECIAL_HPP
#define GINOE_SPECIAL_HPP

#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/bigreal.hpp"
#include "ginoe/precision.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

// n!! with the empty-product convention (-1)!! = 1; throws for n < -1.
Integer double_factorial(long n);

// n! as an exact integer.
Integer factorial_int(unsigned long n);

// Pochhammer (q)_k as an exact rational, q rational.
Rational pochhammer(const Rational& q, unsigned long k);

// Exact Bernoulli number B_n (B_1 = -1/2 convention); cached, thread-safe.
Rational bernoulli(unsigned long n);

// Gamma(x) for real x, x not a nonpositive integer.  Uses the reflection
// formula for x < 1/2 (inside mpfr); error propagated through Gamma' = Gamma*psi.
BigReal gamma_fn(const BigReal& x, const PrecisionContext& ctx);

// log Gamma(x) for x > 0.
BigReal lngamma_fn(const BigReal& x, const PrecisionContext& ctx);

// Gamma(z) for complex z off the nonpositive-integer poles.  Real axis
// delegates to the real routine; otherwise reflection (Re z < 1/2) plus a
// shifted Stirling series with an explicit remainder bound.
BigComplex gamma_fn(const BigComplex& z, const PrecisionContext& ctx);

// Upper Gamma(a,x) and lower gamma(a,x) incomplete gamma functions, a > 0,
// x >= 0.  Series for x < a+1, continued fraction otherwise, both with
// explicit truncation bounds; exact finite sum fast path for integer a.
BigReal upper_incomplete_gamma(const BigReal& a, const BigReal& x, const PrecisionContext& ctx);
BigReal lower_incomplete_gamma(const BigReal& a, const BigReal& x, const PrecisionContext& ctx);

BigReal erf_fn(const BigReal& x, const PrecisionContext& ctx);
BigReal erfc_fn(const BigReal& x, const PrecisionContext& ctx);

// sqrt(2/pi) at working precision, rounded to target.
BigReal sqrt_2_over_pi(const PrecisionContext& ctx);

}  // namespace ginoe

#endif
