#ifndef GINOE_STIELTJES_SERIES_HPP
#define GINOE_STIELTJES_SERIES_HPP

#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/poly.hpp"
#include "ginoe/precision.hpp"

namespace ginoe {

// Rational function with poles confined to t = +/-1, held in partial-fraction
// form: poly(t) + sum_j rm[j-1]/(t-1)^j + sum_j rp[j-1]/(t+1)^j.
struct RatFun {
  Poly poly;
  std::vector<Rational> rm;  // residues at (t-1)^{-j}, j = 1..rm.size()
  std::vector<Rational> rp;  // residues at (t+1)^{-j}

  bool is_zero() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const Rational& s, const RatFun& a);
  RatFun derivative() const;
  RatFun mul_t() const;                 // multiply by t
  RatFun mul_poly(const Poly& p) const; // multiply by a polynomial
  // asymptotic coefficient of t^{-j} as t -> infinity (j >= 1); exact
  Rational coeff_at_infinity(long j) const;
  BigComplex eval(const BigComplex& t) const;
  std::string str() const;
};

// Exact partial-fraction decomposition of P(t) / ((t-1)^m (t+1)^n).
RatFun partial_fractions(const Poly& P, long m, long n);

// One level of the large-N expansion of the rescaled Stieltjes transform:
//   prefactor * ( log_coeff * log((t+1)/(t-1)) + rational part )
// with prefactor sqrt(2/pi) on integer levels and 1 on half-integer levels.
struct StieltjesLevel {
  Rational log_coeff;
  RatFun rational_part;
  bool half = false;
  bool prefactor_sqrt_2_over_pi = true;
  long index = 0;  // level k (integer chain) or k (holding level k+1/2)

  BigComplex eval(const BigComplex& t, const PrecisionContext& ctx) const;
};

struct StieltjesLevels {
  std::vector<StieltjesLevel> integer_levels;  // 0..k_max
  std::vector<StieltjesLevel> half_levels;     // k holds level k+1/2
};

// Recursively solve the operator system; enforces log-term cancellation,
// oddness, and the decay orders (t^-1 for integer levels, t^-(2k+1) for level
// k+1/2).  Throws InternalInconsistencyError on any violation.
StieltjesLevels stieltjes_expansion_levels(long k_max);

// The rescaled-Stieltjes operators.
DiffOp stieltjes_operator_d0();
DiffOp stieltjes_operator_d1();
DiffOp stieltjes_operator_d2();

}  // namespace ginoe

#endif
