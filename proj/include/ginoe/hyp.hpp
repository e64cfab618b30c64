#ifndef GINOE_HYP_HPP
#define GINOE_HYP_HPP

#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/precision.hpp"

namespace ginoe {

// Parameters of a generalized hypergeometric series pFq(numer; denom; z).
struct HypParams {
  std::vector<BigComplex> numer;
  std::vector<BigComplex> denom;
  BigComplex z;
};

// Sum the Gauss series with a rigorous geometric tail bound.
//
// Termination convention: if an exact nonpositive-integer numerator parameter
// truncates the series at or before the first zero of any exact
// nonpositive-integer denominator parameter, the finite sum is returned
// exactly.  Otherwise a nonpositive-integer denominator parameter makes the
// series indeterminate (0/0 in a term) and evaluation fails.
//
// Convergence: beyond k >= 16 (max|parameter| + 1) every term ratio is
// provably <= 3/4 for the argument range used here (|z| <= 1/2 with at most
// one more numerator than denominator parameter), so the tail after the last
// summed term t is bounded by 3 |t|; the bound is folded into the result's
// error field.
BigComplex hyp_pfq(const HypParams& params, const PrecisionContext& ctx);

// Convenience wrappers for real-rational parameters at rational argument.
BigReal hyp_pfq_real(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                     const Rational& z, const PrecisionContext& ctx);

}  // namespace ginoe

#endif
