#include "doctest.h"

#include <cmath>

#include "ginoe/density.hpp"
#include "ginoe/moments.hpp"
#include "ginoe/quadrature.hpp"
#include "ginoe/special.hpp"

using namespace ginoe;

namespace {
const PrecisionContext ctx(160);
const long w = ctx.working_bits();

bool agree(const BigReal& a, const BigReal& b) {
  return cmp_value(abs(a - b), a.err_as_value() + b.err_as_value()) <= 0;
}
}  // namespace

TEST_CASE("rho_real(2, 0) = 1/sqrt(2 pi); evenness; N < 2 rejected") {
  BigReal v = rho_real(2, BigReal::zero(w), ctx);
  BigReal ref = BigReal::one(w) / sqrt(mul_2exp(BigReal::pi(w), 1));
  CHECK(agree(v, ref.round_to(ctx.target_bits)));
  BigReal x = BigReal::from_double(1.37, w);
  CHECK(agree(rho_real(5, x, ctx), rho_real(5, -x, ctx)));
  CHECK_THROWS_AS(rho_real(1, x, ctx), DomainError);
}

TEST_CASE("nonnegativity on a log grid up to sqrt(2N)+10") {
  for (long N : {2L, 5L, 12L, 20L}) {
    double xmax = std::sqrt(2.0 * (double)N) + 10.0;
    for (double x = 1.0 / 64; x < xmax; x *= 2.3) {
      BigReal v = rho_real(N, BigReal::from_double(std::min(x, xmax), w), ctx);
      CHECK(!v.definitely_negative());
    }
  }
}

TEST_CASE("normalization: integral of rho equals M0") {
  for (long N : {2L, 5L, 8L}) {
    double xd = std::ceil(std::sqrt(2.0 * (double)N) + 40.0);
    BigReal xmax = BigReal::from_double(xd, w);
    BigReal I = integrate([&](const BigReal& x) { return rho_real(N, x, ctx.inner()); },
                          BigReal::zero(w), xmax, w, BigReal::two_pow(-ctx.target_bits, 64));
    I = mul_2exp(I, 1);
    I.add_error(density_tail_moment_bound(N, 0, xmax, 64));
    Sqrt2Rational ex = m0_exact(N);
    BigReal ref = BigReal::from_rational(ex.a, w) +
                  BigReal::from_rational(ex.b, w) * sqrt(BigReal::from_long(2, w));
    CHECK(agree(I, ref));
  }
}

TEST_CASE("rho_complex: |y| factor, symmetry, and the trace-moment connection") {
  BigReal x = BigReal::from_double(0.6, w), y = BigReal::from_double(0.8, w);
  CHECK(rho_complex(4, x, BigReal::zero(w), ctx).is_zero_value());
  CHECK(agree(rho_complex(4, x, y, ctx), rho_complex(4, x, -y, ctx)));
  // 2-D quadrature of (x+iy)^2 rho_c for N = 4 against moment_complex_eigs(4,1)
  PrecisionContext cq(96);
  long wq = cq.working_bits();
  double cut = std::sqrt(8.0) + 14.0;
  BigReal R = BigReal::from_double(cut, wq);
  auto inner_y = [&](const BigReal& xx) {
    return integrate(
        [&](const BigReal& yy) {
          // Re((x+iy)^2) = x^2 - y^2; the imaginary part integrates to 0
          return (xx * xx - yy * yy) * rho_complex(4, xx, yy, cq.inner());
        },
        BigReal::zero(wq), R, wq, BigReal::two_pow(-(cq.target_bits + 4), 64));
  };
  BigReal I = integrate(inner_y, BigReal::zero(wq), R, wq,
                        BigReal::two_pow(-(cq.target_bits + 4), 64));
  I = mul_2exp(I, 2);  // four quadrants
  BigReal ref = moment_complex_eigs(4, 1, cq).value;
  // generous tail slack for the finite 2-D box
  I.add_error_2exp(-90);
  CHECK(agree(I, ref));
}

TEST_CASE("derivatives: parity, finite-difference oracle, series/closed-form seam") {
  // rho'(0) = 0 for N >= 3
  DensityDerivs d0 = rho_real_derivatives(5, BigReal::zero(w), ctx);
  CHECK(d0.d1.is_zero_value());
  CHECK(d0.d3.is_zero_value());
  // central finite difference oracle at N=5, x=0.8, step 2^-40
  PrecisionContext cfd(128);
  long wf = cfd.working_bits();
  BigReal x = BigReal::from_double(0.8, wf);
  BigReal h = BigReal::two_pow(-40, wf);
  DensityDerivs dd = rho_real_derivatives(5, x, cfd);
  BigReal fd1 = div_long(mul_2exp(rho_real(5, x + h, cfd) - rho_real(5, x - h, cfd), 39), 1);
  // (f(x+h)-f(x-h))/(2h) with h = 2^-40: scale by 2^39
  CHECK(abs(dd.d1 - fd1).to_double() < 1e-22);
  // second derivative by FD of rho'
  DensityDerivs dp = rho_real_derivatives(5, x + h, cfd);
  DensityDerivs dm = rho_real_derivatives(5, x - h, cfd);
  BigReal fd2 = mul_2exp(dp.d1 - dm.d1, 39);
  CHECK(abs(dd.d2 - fd2).to_double() < 1e-20);
  BigReal fd3 = mul_2exp(dp.d2 - dm.d2, 39);
  CHECK(abs(dd.d3 - fd3).to_double() < 1e-18);
  // series region and closed-form region agree where they meet
  for (double xd : {1.0 / 64, 1.0 / 16}) {
    DensityDerivs a = rho_real_derivatives(6, BigReal::from_double(xd, w), ctx);
    // finite differences of rho_real around the point
    BigReal xx = BigReal::from_double(xd, w);
    BigReal hh = BigReal::two_pow(-44, w);
    BigReal fd = mul_2exp(rho_real(6, xx + hh, ctx) - rho_real(6, xx - hh, ctx), 43);
    CHECK(abs(a.d1 - fd).to_double() < 1e-20);
  }
}

TEST_CASE("third-derivative ODE residual vanishes on a grid") {
  for (long N : {5L, 10L}) {
    for (double xd : {0.4, 1.3, 3.0}) {
      BigReal res = ode_residual_density(N, BigReal::from_double(xd, w), ctx);
      BigReal bound = mul_2exp(res.err_as_value(), 0) + BigReal::two_pow(-100, 64);
      CHECK(cmp_value(abs(res), bound) <= 0);
    }
  }
  // residual at x = 0 is exactly 0 (every term carries x or rho'(0))
  BigReal r0 = ode_residual_density(4, BigReal::zero(w), ctx);
  CHECK(abs(r0).to_double() == 0.0);
}

TEST_CASE("ODE residual at doubled precision, magnitude certified small") {
  PrecisionContext c192(192);
  BigReal res = ode_residual_density(5, BigReal::from_double(1.3, c192.working_bits()), c192);
  // |value| <= err with err < 2^-150 * scale (scale here is O(1))
  CHECK(cmp_value(abs(res), res.err_as_value()) <= 0);
  CHECK(res.err_to_double() < std::pow(2.0, -150));
  BigReal res10 = ode_residual_density(10, BigReal::from_double(3.0, c192.working_bits()), c192);
  CHECK(cmp_value(abs(res10), res10.err_as_value()) <= 0);
}

TEST_CASE("generating-function oracle agrees with the direct formula") {
  for (long N : {2L, 3L, 7L, 10L}) {
    for (double xd : {0.0, 0.5, 1.9}) {
      BigReal x = BigReal::from_double(xd, w);
      BigReal a = rho_via_generating_function(N, x, ctx);
      BigReal b = rho_real(N, x, ctx);
      CAPTURE(N);
      CAPTURE(xd);
      CHECK(cmp_value(abs(a - b), a.err_as_value() + b.err_as_value()) <= 0);
    }
  }
  CHECK_THROWS_AS(rho_via_generating_function(31, BigReal::one(w), ctx), DomainError);
}
