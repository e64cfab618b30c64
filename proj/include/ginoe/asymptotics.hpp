#ifndef GINOE_ASYMPTOTICS_HPP
#define GINOE_ASYMPTOTICS_HPP

#include <vector>

#include "ginoe/bigreal.hpp"
#include "ginoe/poly.hpp"
#include "ginoe/precision.hpp"
#include "ginoe/series.hpp"

namespace ginoe {

// ---------------------------------------------------------------------------
// Large-parameter 2F1 expansion machinery

// q_s(z) coefficients from the generating function
//   ((e^t-1)/t)^{b-1} e^{t(1-c)} (1 - z + z e^{-t})^{-a} = sum_s q_s(z) t^s
// together with the assembled expansion data for
//   2F1(a, b; c+lambda; z) ~ (Gamma(c+lambda)/Gamma(c-b+lambda))
//                            sum_s q_s(z) ((b)_s) lambda^{-s-b}.
struct TwoF1LargeC {
  Rational a, b, c, z;
  std::vector<Rational> q;              // q_0 .. q_{m-1}
  std::vector<Rational> pochhammer_b;   // (b)_s = Gamma(b+s)/Gamma(b), s = 0..m-1
};

TwoF1LargeC gauss_2f1_large_c_expansion(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& z, long m);

// Coefficients a_l, b_l of the sqrt(2N/pi)-scale expansions of the zeroth and
// second real-eigenvalue moments; returned vectors hold indices 1..m-1.
std::vector<Rational> a_coefficients(long m);
std::vector<Rational> b_coefficients(long m);

// ---------------------------------------------------------------------------
// MGF expansion levels

// A function of the form
//   integer level k:      prefactor * ( A(t) t sinh t + B(t) cosh t + s sinh(t)/t )
//   half-integer k+1/2:   A(t) t cosh t + B(t) sinh t
// with exact rational polynomial data; A, B even for integer levels, odd for
// half-integer levels.  prefactor_sqrt_2_over_pi marks the sqrt(2/pi) factor.
struct SinhCoshPoly {
  Poly A;
  Poly B;
  Rational s;   // coefficient of sinh(t)/t (level 0 only)
  Rational c0;  // coefficient of a bare cosh(t) (level 1/2 only)
  bool half = false;
  bool prefactor_sqrt_2_over_pi = true;

  // sinh/cosh coefficient polynomials of the value (sans sinh/t term)
  Poly sinh_coeff() const { return half ? B : A.shift_up(1); }
  Poly cosh_coeff() const {
    Poly base = half ? A.shift_up(1) : B;
    if (c0 != 0) base = base + Poly::constant(c0);
    return base;
  }

  // exact 2p-th derivative at 0 (prefactor excluded)
  Rational deriv2p_at_zero(long p) const;
  Rational value_at_zero() const { return deriv2p_at_zero(0); }
  Rational second_deriv_at_zero() const { return deriv2p_at_zero(1); }

  // numeric evaluation (prefactor included)
  BigReal eval(const BigReal& t, const PrecisionContext& ctx) const;
};

struct MgfLevels {
  std::vector<SinhCoshPoly> integer_levels;  // indices 0..k_max
  std::vector<SinhCoshPoly> half_levels;     // index k holds level k+1/2, k = 0..k_max
};

// Solve the operator recursion level by level; enforces the value-at-0 and
// second-derivative-at-0 cross-checks against a_k / b_k (throws
// InternalInconsistencyError on failure).
MgfLevels mgf_expansion_levels(long k_max);

// The three rescaled-MGF operators and the factorization factors of D0.
DiffOp mgf_operator_d0();
DiffOp mgf_operator_d1();
DiffOp mgf_operator_d2();

// ---------------------------------------------------------------------------
// Moment expansion

// N^{-p} M_2p = sqrt(2N/pi) ( 1/(2p+1) + sum_l b_{l,p} N^-l ) + 1/2
//               + sum_{l=1}^{p-1} c_{l,p} N^-l
struct AsymptoticSeries {
  long p = 0;
  std::vector<Rational> half_power_coeffs;  // index l: coefficient of N^{1/2-l}, relative sqrt(2/pi)
  std::vector<Rational> int_power_coeffs;   // index l: coefficient of N^{-l} (l=0 entry is 1/2)
};

struct MomentAsymptotic {
  AsymptoticSeries series;
  BigReal value;  // numeric evaluation: approximation to M_{2p,N}
};

MomentAsymptotic moment_asymptotic(long N, long p, long m, const MgfLevels& levels,
                                   const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Density corrections (distributional reinterpretation of the levels)

struct DensityCorrection {
  // level 0: uniform slab 1/sqrt(2 pi) on (-1,1); level 1/2: endpoint atoms 1/4.
  bool uniform_slab = false;
  Rational slab_mass;       // total mass of the slab descriptor
  bool endpoint_atoms = false;
  Rational atom_weight;     // weight of each atom at x = +/-1
  SinhCoshPoly polys;       // delta-derivative coefficient data for higher levels
};

DensityCorrection density_correction_polynomials(const MgfLevels& levels, long twice_level);

}  // namespace ginoe

#endif
