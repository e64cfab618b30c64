#include "doctest.h"

#include "ginoe/hyp.hpp"
#include "ginoe/special.hpp"

using namespace ginoe;

namespace {
const PrecisionContext ctx(192);
const long w = ctx.working_bits();

BigComplex cq(const Rational& re, const Rational& im = Rational(0)) {
  return BigComplex::from_rational(re, im, w);
}
}  // namespace

TEST_CASE("numerator parameter 0 truncates at k = 0") {
  HypParams p;
  p.numer = {cq(Rational(0)), cq(Rational(7, 3))};
  p.denom = {cq(Rational(5, 2))};
  p.z = cq(Rational(1, 2));
  BigComplex v = hyp_pfq(p, ctx);
  CHECK(v.re.exact());
  CHECK(cmp_value_si(v.re, 1) == 0);
  CHECK(v.im.is_zero_value());
}

TEST_CASE("1F1(a; a; z) = e^z") {
  HypParams p;
  p.numer = {cq(Rational(7, 5))};
  p.denom = {cq(Rational(7, 5))};
  p.z = cq(Rational(2, 5));
  BigComplex v = hyp_pfq(p, ctx);
  BigReal ref = exp(BigReal::from_rational(Rational(2, 5), w));
  CHECK(cmp_value(abs(v.re - ref), v.re.err_as_value() + ref.err_as_value()) <= 0);
}

TEST_CASE("2F1(1,-1/2;3;1/2) against doubled-precision summation") {
  BigReal lo = hyp_pfq_real({Rational(1), Rational(-1, 2)}, {Rational(3)}, Rational(1, 2), ctx);
  BigReal hi = hyp_pfq_real({Rational(1), Rational(-1, 2)}, {Rational(3)}, Rational(1, 2),
                            ctx.doubled());
  CHECK(cmp_value(abs(lo - hi), lo.err_as_value() + hi.err_as_value()) <= 0);
  // frozen from an independent evaluation
  CHECK(abs(lo - BigReal::from_double(0.91045694996615867968045032645591948762, w)).to_double() <
        1e-15);
}

TEST_CASE("terminating numerator beats denominator zero when it comes first") {
  // numer -1 truncates at k=2; denom -2 would vanish first at k=3
  HypParams p;
  p.numer = {cq(Rational(-1)), cq(Rational(1))};
  p.denom = {cq(Rational(-2))};
  p.z = cq(Rational(1, 2));
  BigComplex v = hyp_pfq(p, ctx);
  // 1 + (-1)(1)/(-2) * z = 1 + z/2 = 5/4
  CHECK(cmp_value(abs(v.re - BigReal::from_rational(Rational(5, 4), w)),
                  v.re.err_as_value() + BigReal::two_pow(-150, 64)) <= 0);
}

TEST_CASE("denominator nonpositive integer without termination is indeterminate") {
  HypParams p;
  p.numer = {cq(Rational(1)), cq(Rational(1, 2))};
  p.denom = {cq(Rational(-2))};
  p.z = cq(Rational(1, 2));
  CHECK_THROWS_AS(hyp_pfq(p, ctx), IndeterminateParamsError);

  // numerator terminates, but only after the denominator zero: also rejected
  HypParams q;
  q.numer = {cq(Rational(-5)), cq(Rational(1))};
  q.denom = {cq(Rational(-2))};
  q.z = cq(Rational(1, 2));
  CHECK_THROWS_AS(hyp_pfq(q, ctx), IndeterminateParamsError);
}

TEST_CASE("divergent p > q+1 and out-of-range z rejected") {
  HypParams p;
  p.numer = {cq(Rational(1)), cq(Rational(2)), cq(Rational(3))};
  p.denom = {cq(Rational(5, 2))};
  p.z = cq(Rational(1, 2));
  CHECK_THROWS_AS(hyp_pfq(p, ctx), NonConvergenceError);

  HypParams q;
  q.numer = {cq(Rational(1)), cq(Rational(1, 3))};
  q.denom = {cq(Rational(4, 3))};
  q.z = cq(Rational(9, 10));
  CHECK_THROWS_AS(hyp_pfq(q, ctx), NonConvergenceError);
}

TEST_CASE("tail bound soundness: randomized parameter sweep vs 4x more terms") {
  // re-evaluating at much higher precision (hence more terms before the
  // stopping rule triggers) must stay within the reported error
  std::vector<std::array<long, 5>> cases = {
      {1, -1, 1, 1, -7}, {2, 3, -1, 1, -11}, {1, 5, 7, 3, -9}, {3, -5, 9, 1, -15}};
  for (const auto& c : cases) {
    std::vector<Rational> numer = {Rational(c[0]), Rational(c[1], 2), Rational(c[2], 2)};
    std::vector<Rational> denom = {Rational(c[3], 2), Rational(c[4], 2)};
    BigReal lo = hyp_pfq_real(numer, denom, Rational(1, 2), ctx);
    BigReal hi = hyp_pfq_real(numer, denom, Rational(1, 2), PrecisionContext(768));
    CHECK(cmp_value(abs(lo - hi), lo.err_as_value() + hi.err_as_value()) <= 0);
  }
}

TEST_CASE("complex parameters") {
  HypParams p;
  p.numer = {cq(Rational(1)), BigComplex::from_rational(Rational(-4, 5), Rational(1, 10), w),
             BigComplex::from_rational(Rational(4, 5), Rational(-1, 10), w)};
  p.denom = {cq(Rational(1, 2)), BigComplex::from_rational(Rational(-7, 2), Rational(1, 5), w)};
  p.z = cq(Rational(1, 2));
  BigComplex lo = hyp_pfq(p, ctx);
  BigComplex hi = hyp_pfq(p, ctx.doubled());
  BigReal dev = abs(lo - hi);
  CHECK(cmp_value(dev, lo.total_err() + hi.total_err() + dev.err_as_value()) <= 0);
}
