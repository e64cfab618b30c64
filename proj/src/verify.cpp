#include "ginoe/verify.hpp"

#include <chrono>
#include <sstream>

#include "ginoe/asymptotics.hpp"
#include "ginoe/density.hpp"
#include "ginoe/moments.hpp"
#include "ginoe/montecarlo.hpp"
#include "ginoe/special.hpp"
#include "ginoe/stieltjes_series.hpp"
#include "ginoe/transforms.hpp"

namespace ginoe {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::vector<CheckResult> results;
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
      std::string detail = body();  // empty string = pass
      r.passed = detail.empty();
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
};

std::string check_le(const BigReal& lhs, const BigReal& rhs, const std::string& what) {
  if (cmp_value(lhs, rhs) <= 0) return "";
  std::ostringstream os;
  os << what << ": " << lhs.to_string(8) << " > " << rhs.to_string(8);
  return os.str();
}

// |a - b| <= err(a) + err(b)
std::string check_agree(const BigReal& a, const BigReal& b, const std::string& what) {
  return check_le(abs(a - b), a.err_as_value() + b.err_as_value(), what);
}

}  // namespace

std::vector<CheckResult> run_verification(bool full) {
  Runner R;
  PrecisionContext ctx(full ? 192 : 128);

  R.run("gamma-family identities", [&] {
    for (long twice_a : {1L, 3L, 5L, 9L}) {
      BigReal a = BigReal::from_rational(Rational(twice_a, 2), ctx.working_bits());
      for (double xd : {0.25, 1.0, 3.5, 9.0}) {
        BigReal x = BigReal::from_double(xd, ctx.working_bits());
        BigReal up = upper_incomplete_gamma(a, x, ctx);
        BigReal lo = lower_incomplete_gamma(a, x, ctx);
        BigReal g = gamma_fn(a, ctx);
        auto bad = check_agree(up + lo, g, "upper+lower=Gamma");
        if (!bad.empty()) return bad;
      }
    }
    return std::string();
  });

  R.run("m0: exact vs 2F1 vs 3F2", [&] {
    long maxN = full ? 12 : 8;
    for (long N = 2; N <= maxN; ++N) {
      Sqrt2Rational ex = m0_exact(N);
      BigReal exv = BigReal::from_rational(ex.a, ctx.working_bits()) +
                    BigReal::from_rational(ex.b, ctx.working_bits()) *
                        sqrt(BigReal::from_long(2, ctx.working_bits()));
      auto bad = check_agree(m0_hyp(N, ctx).value, exv, "m0_hyp vs m0_exact");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
      bad = check_agree(moment_real(N, 0L, ctx).value, exv, "moment_real(.,0) vs m0_exact");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
    }
    return std::string();
  });

  R.run("sum rule M^r + M^c = trace moment", [&] {
    long maxN = full ? 12 : 6;
    long maxP = full ? 6 : 3;
    for (long N = 2; N <= maxN; ++N)
      for (long p = 1; p <= maxP; ++p) {
        BigReal mr = moment_real(N, p, ctx).value;
        BigReal mc = moment_complex_eigs(N, p, ctx).value;
        BigReal tr = BigReal::from_integer(trace_moment(N, p), ctx.working_bits());
        auto bad = check_agree(mr + mc, tr, "sum rule");
        if (!bad.empty())
          return bad + " at N=" + std::to_string(N) + " p=" + std::to_string(p);
      }
    return std::string();
  });

  R.run("three-term recurrence residual", [&] {
    long maxN = full ? 12 : 6;
    long maxP = full ? 10 : 6;
    for (long N = 2; N <= maxN; N += 2) {
      MomentValue M0 = m0_hyp(N, ctx);
      MomentValue M2 = m2_hyp(N, ctx);
      auto seq = moment_sequence_recurrence(N, maxP, M0, M2);
      for (long p = 2; p <= maxP; ++p) {
        BigReal direct = moment_real(N, p, ctx).value;
        auto bad = check_agree(seq[(size_t)p].value, direct, "recurrence vs 3F2");
        if (!bad.empty())
          return bad + " at N=" + std::to_string(N) + " p=" + std::to_string(p);
      }
    }
    return std::string();
  });

  R.run("exact Q(sqrt2) recurrence with recognized M2", [&] {
    long maxN = full ? 12 : 6;
    for (long N = 2; N <= maxN; N += 2) {
      auto m2 = m2_exact_recognized(N);
      if (!m2) return std::string("M2 recognition failed at N=") + std::to_string(N);
      auto seq = moment_sequence_recurrence_exact(N, 8, m0_exact(N), *m2);
      BigReal v8 = BigReal::from_rational(seq[8].a, 512) +
                   BigReal::from_rational(seq[8].b, 512) * sqrt(BigReal::from_long(2, 512));
      BigReal direct = moment_real(N, 8L, PrecisionContext(320)).value;
      auto bad = check_agree(v8.round_to(320), direct, "exact path vs 3F2 at p=8");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
    }
    return std::string();
  });

  R.run("a/b coefficients and printed expansions", [&] {
    auto a = a_coefficients(5);
    auto b = b_coefficients(5);
    if (a != std::vector<Rational>{Rational(-3, 8), Rational(-3, 128), Rational(27, 1024),
                                   Rational(499, 32768)})
      return std::string("a_l mismatch");
    if (b != std::vector<Rational>{Rational(3, 8), Rational(-43, 384), Rational(29, 1024),
                                   Rational(1859, 98304)})
      return std::string("b_l mismatch");
    return std::string();
  });

  R.run("mgf levels: operator recursion + derivative pinning", [&] {
    MgfLevels lv = mgf_expansion_levels(full ? 6 : 4);  // throws on any failure
    (void)lv;
    return std::string();
  });

  R.run("stieltjes levels: decay and oddness", [&] {
    StieltjesLevels lv = stieltjes_expansion_levels(full ? 5 : 3);
    (void)lv;
    return std::string();
  });

  R.run("density ODE residual", [&] {
    for (long N : {3L, 5L, 10L}) {
      for (double xd : {0.7, 1.3, 3.0}) {
        BigReal x = BigReal::from_double(xd, ctx.working_bits());
        BigReal res = ode_residual_density(N, x, ctx);
        if (!abs(res).certainly_abs_le(mul_2exp(res.err_as_value(), 1) + BigReal::two_pow(-ctx.target_bits / 2, 64)))
          return std::string("density ODE residual too large at N=") + std::to_string(N);
      }
    }
    return std::string();
  });

  R.run("mgf/stieltjes ODE residuals", [&] {
    for (long N : {3L, 6L}) {
      BigReal res = mgf_ode_residual(N, BigReal::from_double(0.7, ctx.working_bits()), ctx);
      auto bad = check_le(abs(res), mul_2exp(res.err_as_value(), 1), "mgf residual");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
      BigComplex t(BigReal::from_long(1, ctx.working_bits()),
                   BigReal::from_long(2, ctx.working_bits()));
      BigComplex sres = stieltjes_ode_residual(N, t, ctx);
      auto bad2 = check_le(abs(sres), mul_2exp(sres.total_err(), 1), "stieltjes residual");
      if (!bad2.empty()) return bad2 + " at N=" + std::to_string(N);
    }
    return std::string();
  });

  R.run("generating-function density oracle", [&] {
    long maxN = full ? 10 : 6;
    for (long N = 2; N <= maxN; N += 2) {
      BigReal x = BigReal::from_double(0.5, ctx.working_bits());
      auto bad = check_agree(rho_via_generating_function(N, x, ctx), rho_real(N, x, ctx),
                             "gen-func vs direct");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
    }
    return std::string();
  });

  R.run("quadrature oracle on moments", [&] {
    long maxN = full ? 8 : 4;
    for (long N = 2; N <= maxN; N += 2) {
      MomentValue q = moment_real_quadrature(N, BigReal::from_long(1, ctx.working_bits()), ctx);
      auto bad = check_agree(q.value, moment_real(N, 1L, ctx).value, "quad vs 3F2");
      if (!bad.empty()) return bad + " at N=" + std::to_string(N);
    }
    return std::string();
  });

  R.run("monte carlo sanity", [&] {
    MCConfig cfg;
    cfg.N = 2;
    cfg.n_samples = full ? 40000 : 8000;
    cfg.seed = 20260810;
    cfg.workers = 4;
    MCSummary s = empirical_real_moments(cfg, {0});
    for (auto& [cnt, freq] : s.real_count_histogram)
      if ((cnt - cfg.N) % 2 != 0)
        return std::string("real-count parity violated");
    double exact = 1.4142135623730951;
    double dev = std::abs(s.moments[0].mean - exact) / s.moments[0].stderr_;
    if (dev > 5.0) return std::string("E N_R off by ") + std::to_string(dev) + " sigma";
    return std::string();
  });

  return R.results;
}

}  // namespace ginoe
