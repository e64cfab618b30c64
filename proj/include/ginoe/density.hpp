#ifndef GINOE_DENSITY_HPP
#define GINOE_DENSITY_HPP

#include "ginoe/bigreal.hpp"
#include "ginoe/precision.hpp"

namespace ginoe {

// Mean density of real eigenvalues of an N x N GinOE matrix, N >= 2.
BigReal rho_real(long N, const BigReal& x, const PrecisionContext& ctx);

// Mean density of complex eigenvalues at x + iy.
BigReal rho_complex(long N, const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

struct DensityDerivs {
  BigReal rho;
  BigReal d1;
  BigReal d2;
  BigReal d3;
};

// Analytic derivatives (no finite differences).  Away from 0 they come from
// the closed forms in a(x) = x^{2N-3} e^{-x^2} and
// b(x) = 2^{(N-3)/2} e^{-x^2/2} x^{N-2} gamma((N-1)/2, x^2/2); near 0 from the
// exact even Taylor expansion of the density (which also supplies the third
// derivative as a limit, the ODE being singular there).
DensityDerivs rho_real_derivatives(long N, const BigReal& x, const PrecisionContext& ctx);

// Residual of x^2 rho''' + x (3x^2-3N+4) rho'' + (2x^2-2N+1)(x^2-N+2) rho'.
BigReal ode_residual_density(long N, const BigReal& x, const PrecisionContext& ctx);

// Independent evaluation through the coefficient of z^N in the generating
// function F(z, x) = sum_N rho_N(x) z^N, expanded as a numeric power series.
BigReal rho_via_generating_function(long N, const BigReal& x, const PrecisionContext& ctx,
                                    long n_max = 30);

// Decreasing envelope E(x) >= rho_N(x) valid for x >= sqrt(2N), and the
// matching bound for |rho_N'(x)|; both used for analytic tail bounds.
BigReal rho_envelope_bound(long N, const BigReal& x, long prec);
BigReal rho_deriv_envelope_bound(long N, const BigReal& x, long prec);

// Upper bound for 2 * int_T^infinity x^{2p} rho_N(x) dx (real p >= 0 rounded
// up through pow_si on x; callers pass integer two_p = floor(2p)+1 safe form).
BigReal density_tail_moment_bound(long N, long xpow, const BigReal& T, long prec);

}  // namespace ginoe

#endif
