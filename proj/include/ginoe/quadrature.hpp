#ifndef GINOE_QUADRATURE_HPP
#define GINOE_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ginoe/bigcomplex.hpp"
#include "ginoe/bigreal.hpp"

namespace ginoe {

// Gauss-Legendre rule on [-1, 1]; nodes/weights carry their own error bounds.
struct GLRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

// Cached n-point rule at the given working precision (thread-safe; the cache
// never changes values once computed).
const GLRule& gl_rule(long n, long prec);

// Adaptive bisection with a whole-panel vs split-panel truncation estimate.
// Function-evaluation and rounding errors propagate through the BigReal error
// fields; the bisection estimate is added on top.  abs_tol is the truncation
// budget for the whole interval.
BigReal integrate(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                  const BigReal& b, long working_bits, const BigReal& abs_tol);

BigComplex integrate_complex(const std::function<BigComplex(const BigReal&)>& f,
                             const BigReal& a, const BigReal& b, long working_bits,
                             const BigReal& abs_tol);

// Rigorous upper bound for int_T^infinity x^j e^{-alpha x^2} dx, valid when
// 2 alpha T^2 >= 2 max(j, 1):  T^{j-1} e^{-alpha T^2} / alpha.
BigReal gaussian_tail_bound(long j, const BigReal& alpha, const BigReal& T, long prec);

}  // namespace ginoe

#endif
