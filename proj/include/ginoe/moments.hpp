#ifndef GINOE_MOMENTS_HPP
#define GINOE_MOMENTS_HPP

#include <optional>
#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/bigreal.hpp"
#include "ginoe/precision.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

struct MomentValue {
  enum class Method { hypergeometric, recurrence, quadrature, exact_sum };
  BigReal value;
  std::optional<Sqrt2Rational> exact;
  Method method = Method::hypergeometric;
  bool recognized_not_proven = false;
};

// E Tr G^{2p} = N (N+2) ... (N+2p-2), exact.
Integer trace_moment(long N, long p);

// M_{2p,N}^r by the 3F2 evaluation formula; real p with p > -1/2, exact
// half-integers rejected with IndeterminateParamsError (use the halfint
// routine).  N = 1 uses the standard-normal absolute moment directly.
MomentValue moment_real(long N, const BigReal& p, const PrecisionContext& ctx);
MomentValue moment_real(long N, long p, const PrecisionContext& ctx);

// The analytic continuation to complex p, Re p > -1/2 (series + complex
// gamma); used by the recurrence and contiguous-relation checks.
BigComplex moment_real_complex(long N, const BigComplex& p, const PrecisionContext& ctx);

// Limit p -> q + 1/2 by two-point Richardson extrapolation in epsilon.
MomentValue moment_real_halfint(long N, long q, const PrecisionContext& ctx);

// M_{2p,N}^c, integer p >= 1.
MomentValue moment_complex_eigs(long N, long p, const PrecisionContext& ctx);

// Expected number of real eigenvalues, exact terminating form.
Sqrt2Rational m0_exact(long N);

// M_0 via the Gauss 2F1 formula; M_2 via the two-2F1 evaluation formula.
MomentValue m0_hyp(long N, const PrecisionContext& ctx);
MomentValue m2_hyp(long N, const PrecisionContext& ctx);

// Three-term recurrence 2(2p+1) M_2p = (2p-1)(6p+4N-5) M_{2p-2}
//   - (2p-3)(2p+N-4)(2p+2N-3) M_{2p-4}, seeded at p = 0, 1.
// Returns M_0 .. M_{2 p_max}.
std::vector<MomentValue> moment_sequence_recurrence(long N, long p_max, const MomentValue& M0,
                                                    const MomentValue& M2);
std::vector<Sqrt2Rational> moment_sequence_recurrence_exact(long N, long p_max,
                                                            const Sqrt2Rational& M0,
                                                            const Sqrt2Rational& M2);

// Recognize M_2 in Q(sqrt2) from a 512-bit evaluation, verified against a
// 1024-bit evaluation; "recognized, not proven".
std::optional<Sqrt2Rational> m2_exact_recognized(long N);

// |LHS - RHS| of the contiguous three-term relation among the 3F2 factors.
BigReal hyp3f2_contiguous_residual(long N, const BigComplex& p, const PrecisionContext& ctx);

// Residual of the moment recurrence at complex p (valid by analytic
// continuation): 2(2p+1) M(p) - [(2p-1)(6p+4N-5) M(p-1) - ...].
BigComplex moment_recurrence_residual_complex(long N, const BigComplex& p,
                                              const PrecisionContext& ctx);

// Quadrature oracle: 2 int_0^inf x^{2p} rho dx with analytic tail bound.
MomentValue moment_real_quadrature(long N, const BigReal& p, const PrecisionContext& ctx);

}  // namespace ginoe

#endif
