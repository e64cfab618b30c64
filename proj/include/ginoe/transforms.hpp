#ifndef GINOE_TRANSFORMS_HPP
#define GINOE_TRANSFORMS_HPP

#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/precision.hpp"

namespace ginoe {

struct TransformValue {
  BigComplex t;
  BigComplex value;
  std::vector<BigComplex> derivs;  // derivative orders 1..k
};

// Moment generating function u(t) = int e^{tx} rho(x) dx and its first
// k_derivs derivatives, summed from the even-moment series with a rigorous
// tail bound (moments are dominated by E (chi^2_{N^2})^p).
TransformValue mgf_value(long N, const BigReal& t, long k_derivs, const PrecisionContext& ctx);

// Residual of 2t u'''' - (3t^2-8) u''' + t(t^2-4N-13) u''
//             + ((3N+2)t^2-8N-8) u' + (2N^2+N) t u.
BigReal mgf_ode_residual(long N, const BigReal& t, const PrecisionContext& ctx);

// Stieltjes transform W(t) = int rho(x)/(t-x) dx and derivatives by
// differentiated-kernel quadrature.  Requires Im(t) != 0; real t is accepted
// for the value only, when |t| exceeds the quadrature cutoff.
TransformValue stieltjes_value(long N, const BigComplex& t, long k_derivs,
                               const PrecisionContext& ctx);

// Residual of A_N[t] W(t) - ((1 + 4N - 2 t^2) M_0 - 6 M_2).
BigComplex stieltjes_ode_residual(long N, const BigComplex& t, const PrecisionContext& ctx);

}  // namespace ginoe

#endif
