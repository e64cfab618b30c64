#include "doctest.h"

#include <random>

#include "ginoe/series.hpp"

using namespace ginoe;

namespace {
using RS = PowerSeries<Rational>;

RS make(std::initializer_list<Rational> c) { return RS(std::vector<Rational>(c)); }

// independent oracle: (1+u)^r = sum_k binom(r, k) u^k with u = a - 1 (no
// constant term), truncated exactly -- no exp/log involved
RS pow_by_binomial(const RS& a, const Rational& r) {
  long n = a.order();
  RS u = a;
  u.coeffs[0] = 0;
  RS out = RS::constant(Rational(1), n);
  RS upow = RS::constant(Rational(1), n);
  Rational binom(1);
  for (long k = 1; k <= n; ++k) {
    upow = ps_mul(upow, u);
    binom = binom * (r - Rational(k - 1)) / Rational(k);
    out = ps_add(out, ps_scale(upow, binom));
  }
  return out;
}

std::mt19937_64 rng(0x5eed5eedULL);
Rational random_rational(long hi) {
  long num = (long)(rng() % (2 * hi + 1)) - hi;
  long den = (long)(rng() % hi) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}
RS random_unit_series(long order, long hi) {
  std::vector<Rational> c{Rational(1)};
  for (long k = 1; k <= order; ++k) c.push_back(random_rational(hi));
  return RS(std::move(c));
}
}  // namespace

TEST_CASE("mul/div basics") {
  RS s = make({Rational(1), Rational(2), Rational(-1), Rational(1, 3)});
  RS one = RS::constant(Rational(1), 3);
  CHECK(ps_mul(s, one).coeffs == s.coeffs);
  CHECK(ps_div(s, s).coeffs == one.coeffs);
  RS a = make({Rational(1), Rational(1)});
  RS b = make({Rational(1), Rational(-1)});
  // (1+t)(1-t) truncated at order 1 claims only up to t^1
  CHECK(ps_mul(a, b).coeffs == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK_THROWS_AS(ps_div(one, make({Rational(0), Rational(1), Rational(0), Rational(0)})),
                  DomainError);
}

TEST_CASE("exp/log inverses and factorial coefficients") {
  RS t = make({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
  RS e = ps_exp(t);
  Rational kfac(1);
  for (long k = 0; k <= 5; ++k) {
    if (k > 0) kfac *= k;
    CHECK(e.coeffs[(size_t)k] == Rational(1) / kfac);
  }
  CHECK(ps_log(e).coeffs == t.coeffs);
  CHECK(ps_exp(RS::constant(Rational(0), 4)).coeffs == RS::constant(Rational(1), 4).coeffs);
  RS g = random_unit_series(8, 6);
  CHECK(ps_exp(ps_log(g)).coeffs == g.coeffs);
  CHECK_THROWS_AS(ps_exp(make({Rational(1), Rational(1)})), DomainError);
  CHECK_THROWS_AS(ps_log(make({Rational(2), Rational(1)})), DomainError);
}

TEST_CASE("expm1_over_t coefficients are 1/(k+1)!") {
  RS f = ps_expm1_over_t(5);
  CHECK(f[0] == Rational(1));
  CHECK(f[1] == Rational(1, 2));
  CHECK(f[3] == Rational(1, 24));
  CHECK(f[5] == Rational(1, 720));
}

TEST_CASE("ps_pow: identities and the multinomial oracle") {
  RS s = random_unit_series(7, 5);
  CHECK(ps_pow(s, Rational(0)).coeffs == RS::constant(Rational(1), 7).coeffs);
  CHECK(ps_pow(s, Rational(1)).coeffs == s.coeffs);
  // ((e^t-1)/t)^{-3/2}: first coefficients 1, -3/4, 7/32
  RS base = ps_expm1_over_t(6);
  RS p = ps_pow(base, Rational(-3, 2));
  CHECK(p[0] == Rational(1));
  CHECK(p[1] == Rational(-3, 4));
  CHECK(p[2] == Rational(7, 32));
  // full agreement with the independent binomial-expansion oracle
  CHECK(p.coeffs == pow_by_binomial(base, Rational(-3, 2)).coeffs);
  RS s2 = random_unit_series(6, 4);
  Rational r(-7, 3);
  CHECK(ps_pow(s2, r).coeffs == pow_by_binomial(s2, r).coeffs);
  CHECK_THROWS_AS(ps_pow(make({Rational(2), Rational(1)}), Rational(1, 2)), DomainError);
}

TEST_CASE("property: pow(a, r+s) = pow(a,r) * pow(a,s) for random inputs") {
  for (int rep = 0; rep < 6; ++rep) {
    RS a = random_unit_series(9, 4);
    Rational r = random_rational(7), s = random_rational(7);
    RS lhs = ps_pow(a, r + s);
    RS rhs = ps_mul(ps_pow(a, r), ps_pow(a, s));
    CHECK(lhs.coeffs == rhs.coeffs);
    // pow(a,r) * pow(a,-r) = 1
    RS unit = ps_mul(ps_pow(a, r), ps_pow(a, -r));
    CHECK(unit.coeffs == RS::constant(Rational(1), 9).coeffs);
  }
}

TEST_CASE("exactness: higher truncation order reproduces lower-order coefficients") {
  RS lo = ps_pow(ps_expm1_over_t(6), Rational(-5, 2));
  RS hi = ps_pow(ps_expm1_over_t(14), Rational(-5, 2));
  for (size_t k = 0; k <= 6; ++k) CHECK(lo[k] == hi[k]);
}

TEST_CASE("BigReal-coefficient variant matches the rational instance") {
  RS qs = random_unit_series(6, 4);
  std::vector<BigReal> bc;
  for (const auto& q : qs.coeffs) bc.push_back(BigReal::from_rational(q, 192));
  PowerSeries<BigReal> bs(std::move(bc));
  PowerSeries<BigReal> blog = ps_log(bs);
  RS qlog = ps_log(qs);
  for (size_t k = 0; k <= 6; ++k) {
    BigReal ref = BigReal::from_rational(qlog[k], 192);
    CHECK(cmp_value(abs(blog[k] - ref), blog[k].err_as_value() + ref.err_as_value()) <= 0);
  }
}
