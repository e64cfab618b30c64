// Command-line interface: every computation in the suite with
// machine-readable output (json by default, csv/text alternatives).
// Exit codes: 0 ok, 2 usage, 3 domain error, 4 verification failure,
// 5 internal inconsistency.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ginoe/asymptotics.hpp"
#include "ginoe/density.hpp"
#include "ginoe/moments.hpp"
#include "ginoe/montecarlo.hpp"
#include "ginoe/special.hpp"
#include "ginoe/stieltjes_series.hpp"
#include "ginoe/transforms.hpp"
#include "ginoe/verify.hpp"

using json = nlohmann::json;
using namespace ginoe;

namespace {

struct GlobalOpts {
  long prec = 128;
  std::string format = "json";
  std::uint64_t seed = 1;
};

size_t decimal_digits(long bits) { return (size_t)std::ceil(bits * 0.30103) + 2; }

std::string value_str(const BigReal& v, long bits) { return v.to_string(decimal_digits(bits)); }

json entry(const std::string& name, const BigReal& v, long bits,
           const std::string& method = "") {
  json e;
  e["name"] = name;
  e["value"] = value_str(v, bits);
  e["err"] = v.err_to_string();
  if (!method.empty()) e["method"] = method;
  return e;
}

json exact_entry(const std::string& name, const Sqrt2Rational& v) {
  json e;
  e["name"] = name;
  e["exact"] = {{"a", v.a.get_str()}, {"b", v.b.get_str()}};
  e["method"] = "exact-sum";
  return e;
}

json poly_json(const Poly& p) {
  json arr = json::array();
  for (long k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff((size_t)k).get_str());
  return arr;
}

void emit(const json& record, const GlobalOpts& g) {
  if (g.format == "json") {
    std::cout << record.dump(2) << "\n";
    return;
  }
  if (g.format == "csv") {
    std::cout << "name,value,err,method,exact_a,exact_b\n";
    if (record.contains("values"))
      for (const auto& e : record["values"]) {
        std::cout << e.value("name", "") << "," << e.value("value", "") << ","
                  << e.value("err", "") << "," << e.value("method", "") << ",";
        if (e.contains("exact"))
          std::cout << e["exact"].value("a", "") << "," << e["exact"].value("b", "");
        else
          std::cout << ",";
        std::cout << "\n";
      }
    return;
  }
  // text
  std::cout << record.value("command", "") << " (prec " << record.value("precision_bits", 0L)
            << " bits)\n";
  if (record.contains("values"))
    for (const auto& e : record["values"]) {
      std::cout << "  " << e.value("name", "") << " = ";
      if (e.contains("exact"))
        std::cout << "(" << e["exact"].value("a", "") << ") + (" << e["exact"].value("b", "")
                  << ")*sqrt(2)";
      else
        std::cout << e.value("value", "") << "  +/- " << e.value("err", "");
      if (e.contains("method")) std::cout << "  [" << e.value("method", "") << "]";
      std::cout << "\n";
    }
  for (const auto& key : {"note", "detail"})
    if (record.contains(key)) std::cout << "  " << record.value(key, "") << "\n";
}

json base_record(const std::string& cmd, const GlobalOpts& g) {
  json r;
  r["command"] = cmd;
  r["precision_bits"] = g.prec;
  r["values"] = json::array();
  return r;
}

// parse "3", "1/2", "-0.25" into a BigReal at working precision; flags
// whether the value is an exact half-integer or integer
BigReal parse_real(const std::string& s, long prec) {
  if (s.find('/') != std::string::npos) {
    Rational q(s);
    q.canonicalize();
    return BigReal::from_rational(q, prec);
  }
  BigReal v(prec);
  if (mpfr_set_str(v.mutable_value(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("cannot parse number: " + s);
  return v;
}

int run_verify(bool full, const GlobalOpts& g) {
  auto results = run_verification(full);
  bool all = true;
  json rec = base_record("verify", g);
  for (const auto& r : results) {
    all = all && r.passed;
    json e;
    e["name"] = r.name;
    e["value"] = r.passed ? "pass" : "FAIL";
    e["seconds"] = r.seconds;
    if (!r.detail.empty()) e["detail"] = r.detail;
    rec["values"].push_back(e);
    std::cerr << (r.passed ? "[pass] " : "[FAIL] ") << r.name << "  ("
              << (int)(r.seconds * 1000) << " ms)" << (r.detail.empty() ? "" : "  " + r.detail)
              << "\n";
  }
  rec["result"] = all ? "pass" : "fail";
  emit(rec, g);
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral moments of the real eigenvalues of real Ginibre matrices"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--prec", g.prec, "target precision in bits")->capture_default_str();
  app.add_option("--format", g.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "global RNG seed (mc)");

  // ---- moment ----
  auto* c_moment = app.add_subcommand("moment", "real-eigenvalue moment M_{2p,N}^r");
  long m_N = 2;
  std::string m_p = "1";
  bool m_exact = false;
  std::string m_method = "hyp";
  c_moment->add_option("--N", m_N)->required();
  c_moment->add_option("--p", m_p)->required();
  c_moment->add_flag("--exact", m_exact, "exact Q(sqrt2) path (integer p)");
  c_moment->add_option("--method", m_method)->check(CLI::IsMember({"hyp", "rec", "quad"}));

  // ---- m0 ----
  auto* c_m0 = app.add_subcommand("m0", "expected number of real eigenvalues");
  long z_N = 2;
  bool z_exact = false;
  c_m0->add_option("--N", z_N)->required();
  c_m0->add_flag("--exact", z_exact);

  // ---- density ----
  auto* c_dens = app.add_subcommand("density", "real/complex eigenvalue densities");
  long d_N = 2;
  std::string d_x = "0";
  std::string d_grid;
  bool d_derivs = false, d_ode = false;
  c_dens->add_option("--N", d_N)->required();
  c_dens->add_option("--x", d_x);
  c_dens->add_option("--grid", d_grid, "a:b:n grid of x values");
  c_dens->add_flag("--derivs", d_derivs);
  c_dens->add_flag("--ode-residual", d_ode);

  // ---- asymp ----
  auto* c_asymp = app.add_subcommand("asymp", "large-N expansion data");
  std::string a_kind;
  long a_m = 5, a_N = 100, a_p = 0;
  c_asymp->add_option("kind", a_kind, "a | b | moment")->required();
  c_asymp->add_option("--m", a_m);
  c_asymp->add_option("--N", a_N);
  c_asymp->add_option("--p", a_p);

  // ---- mgf-series / stieltjes-series ----
  auto* c_mgfs = app.add_subcommand("mgf-series", "MGF expansion level polynomials");
  long ms_kmax = 3;
  c_mgfs->add_option("--kmax", ms_kmax);
  auto* c_sts = app.add_subcommand("stieltjes-series", "Stieltjes expansion levels");
  long ss_kmax = 2;
  c_sts->add_option("--kmax", ss_kmax);

  // ---- mgf / stieltjes ----
  auto* c_mgf = app.add_subcommand("mgf", "moment generating function u(t)");
  long f_N = 2;
  std::string f_t = "1";
  bool f_ode = false;
  c_mgf->add_option("--N", f_N)->required();
  c_mgf->add_option("--t", f_t)->required();
  c_mgf->add_flag("--ode-residual", f_ode);

  auto* c_st = app.add_subcommand("stieltjes", "Stieltjes transform W(t)");
  long s_N = 2;
  std::string s_tre = "0", s_tim = "1";
  bool s_ode = false;
  c_st->add_option("--N", s_N)->required();
  c_st->add_option("--t", s_tre, "real part of t");
  c_st->add_option("--ti", s_tim, "imaginary part of t");
  c_st->add_flag("--ode-residual", s_ode);

  // ---- mc ----
  auto* c_mc = app.add_subcommand("mc", "Monte Carlo verification");
  long mc_N = 2, mc_samples = 10000, mc_workers = 1;
  std::string mc_plist = "0,1";
  std::string mc_dump;
  std::string mc_mode = "schur-blocks";
  c_mc->add_option("--N", mc_N)->required();
  c_mc->add_option("--samples", mc_samples);
  c_mc->add_option("--workers", mc_workers);
  c_mc->add_option("--p-list", mc_plist);
  c_mc->add_option("--dump", mc_dump);
  c_mc->add_option("--realness-mode", mc_mode)
      ->check(CLI::IsMember({"schur-blocks", "imag-threshold"}));

  // ---- verify ----
  auto* c_ver = app.add_subcommand("verify", "run the invariant suites");
  bool v_quick = false, v_full = false;
  c_ver->add_flag("--quick", v_quick);
  c_ver->add_flag("--full", v_full);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    PrecisionContext ctx(g.prec);
    long w = ctx.working_bits();

    if (*c_moment) {
      json rec = base_record("moment", g);
      rec["params"] = {{"N", m_N}, {"p", m_p}, {"method", m_method}, {"exact", m_exact}};
      BigReal p = parse_real(m_p, w);
      if (m_exact) {
        if (!p.is_integer_value() || !p.exact() || p.sign_value() < 0)
          throw DomainError("--exact requires a nonnegative integer p");
        long pl = p.to_long();
        Sqrt2Rational M0 = m0_exact(m_N);
        if (pl == 0) {
          rec["values"].push_back(exact_entry("M_0", M0));
        } else {
          auto M2 = m2_exact_recognized(m_N);
          if (!M2) throw NonConvergenceError("M2 recognition failed");
          json e;
          if (pl == 1) {
            e = exact_entry("M_2", *M2);
          } else {
            auto seq = moment_sequence_recurrence_exact(m_N, pl, M0, *M2);
            e = exact_entry("M_" + std::to_string(2 * pl), seq[(size_t)pl]);
            e["method"] = "recurrence";
          }
          e["recognized_not_proven"] = true;
          rec["values"].push_back(e);
        }
      } else if (m_method == "quad") {
        MomentValue mv = moment_real_quadrature(m_N, p, ctx);
        rec["values"].push_back(entry("M_{2p}", mv.value, g.prec, "quadrature"));
      } else if (m_method == "rec") {
        if (!p.is_integer_value() || p.sign_value() < 1)
          throw DomainError("--method rec requires integer p >= 1");
        auto seq = moment_sequence_recurrence(m_N, std::max(2L, p.to_long()), m0_hyp(m_N, ctx),
                                              m2_hyp(m_N, ctx));
        rec["values"].push_back(
            entry("M_{2p}", seq[(size_t)p.to_long()].value, g.prec, "recurrence"));
      } else {
        bool halfint = p.exact() && mul_2exp(p, 1).is_integer_value() && !p.is_integer_value();
        MomentValue mv = halfint
                             ? moment_real_halfint(m_N, (mul_2exp(p, 1).to_long() - 1) / 2, ctx)
                             : moment_real(m_N, p, ctx);
        rec["values"].push_back(entry("M_{2p}", mv.value, g.prec, "hypergeometric"));
      }
      emit(rec, g);
      return 0;
    }

    if (*c_m0) {
      json rec = base_record("m0", g);
      rec["params"] = {{"N", z_N}, {"exact", z_exact}};
      if (z_exact) {
        rec["values"].push_back(exact_entry("M_0", m0_exact(z_N)));
      } else {
        rec["values"].push_back(entry("M_0", m0_hyp(z_N, ctx).value, g.prec, "hypergeometric"));
      }
      emit(rec, g);
      return 0;
    }

    if (*c_dens) {
      json rec = base_record("density", g);
      rec["params"] = {{"N", d_N}, {"x", d_x}};
      if (!d_grid.empty()) {
        double a, b;
        long n;
        if (std::sscanf(d_grid.c_str(), "%lf:%lf:%ld", &a, &b, &n) != 3 || n < 1)
          throw DomainError("--grid expects a:b:n");
        for (long i = 0; i <= n; ++i) {
          double x = a + (b - a) * (double)i / (double)n;
          BigReal xv = BigReal::from_double(x, w);
          std::ostringstream name;
          name << "rho(" << x << ")";
          rec["values"].push_back(entry(name.str(), rho_real(d_N, xv, ctx), g.prec));
        }
      } else {
        BigReal x = parse_real(d_x, w);
        if (d_derivs) {
          DensityDerivs dd = rho_real_derivatives(d_N, x, ctx);
          rec["values"].push_back(entry("rho", dd.rho, g.prec));
          rec["values"].push_back(entry("rho'", dd.d1, g.prec));
          rec["values"].push_back(entry("rho''", dd.d2, g.prec));
          rec["values"].push_back(entry("rho'''", dd.d3, g.prec));
        } else {
          rec["values"].push_back(entry("rho", rho_real(d_N, x, ctx), g.prec));
        }
        if (d_ode)
          rec["values"].push_back(entry("ode_residual", ode_residual_density(d_N, x, ctx), g.prec));
      }
      emit(rec, g);
      return 0;
    }

    if (*c_asymp) {
      json rec = base_record("asymp " + a_kind, g);
      rec["params"] = {{"m", a_m}, {"N", a_N}, {"p", a_p}};
      if (a_kind == "a" || a_kind == "b") {
        auto coeffs = a_kind == "a" ? a_coefficients(a_m) : b_coefficients(a_m);
        json arr = json::array();
        for (const auto& c : coeffs) arr.push_back(c.get_str());
        rec["coefficients"] = arr;
      } else if (a_kind == "moment") {
        MgfLevels lv = mgf_expansion_levels(a_m);
        MomentAsymptotic ma = moment_asymptotic(a_N, a_p, a_m, lv, ctx);
        json hp = json::array(), ip = json::array();
        for (const auto& c : ma.series.half_power_coeffs) hp.push_back(c.get_str());
        for (const auto& c : ma.series.int_power_coeffs) ip.push_back(c.get_str());
        rec["half_power_coeffs"] = hp;
        rec["int_power_coeffs"] = ip;
        rec["values"].push_back(entry("asymptotic_value", ma.value, g.prec));
      } else {
        throw DomainError("asymp kind must be a | b | moment");
      }
      emit(rec, g);
      return 0;
    }

    if (*c_mgfs) {
      json rec = base_record("mgf-series", g);
      MgfLevels lv = mgf_expansion_levels(ms_kmax);
      json levels = json::array();
      for (size_t k = 0; k < lv.integer_levels.size(); ++k) {
        const auto& L = lv.integer_levels[k];
        levels.push_back({{"level", (long)k},
                          {"prefactor", "sqrt(2/pi)"},
                          {"A_times_t_sinh", poly_json(L.A)},
                          {"B_times_cosh", poly_json(L.B)},
                          {"sinh_over_t", L.s.get_str()}});
      }
      for (size_t k = 0; k < lv.half_levels.size(); ++k) {
        const auto& L = lv.half_levels[k];
        levels.push_back({{"level", std::to_string(k) + "+1/2"},
                          {"prefactor", "1"},
                          {"A_times_t_cosh", poly_json(L.A)},
                          {"B_times_sinh", poly_json(L.B)},
                          {"bare_cosh", L.c0.get_str()}});
      }
      rec["levels"] = levels;
      emit(rec, g);
      return 0;
    }

    if (*c_sts) {
      json rec = base_record("stieltjes-series", g);
      StieltjesLevels lv = stieltjes_expansion_levels(ss_kmax);
      json levels = json::array();
      auto level_json = [](const StieltjesLevel& L, const std::string& name) {
        json rm = json::array(), rp = json::array();
        for (const auto& qq : L.rational_part.rm) rm.push_back(qq.get_str());
        for (const auto& qq : L.rational_part.rp) rp.push_back(qq.get_str());
        return json{{"level", name},
                    {"prefactor", L.prefactor_sqrt_2_over_pi ? "sqrt(2/pi)" : "1"},
                    {"log_coeff", L.log_coeff.get_str()},
                    {"residues_at_plus1_pole", rp},
                    {"residues_at_minus1_pole", rm},
                    {"rational_part", L.rational_part.str()}};
      };
      for (size_t k = 0; k < lv.integer_levels.size(); ++k)
        levels.push_back(level_json(lv.integer_levels[k], std::to_string(k)));
      for (size_t k = 0; k < lv.half_levels.size(); ++k)
        levels.push_back(level_json(lv.half_levels[k], std::to_string(k) + "+1/2"));
      rec["levels"] = levels;
      emit(rec, g);
      return 0;
    }

    if (*c_mgf) {
      json rec = base_record("mgf", g);
      rec["params"] = {{"N", f_N}, {"t", f_t}};
      BigReal t = parse_real(f_t, w);
      TransformValue u = mgf_value(f_N, t, f_ode ? 4 : 0, ctx);
      rec["values"].push_back(entry("u(t)", u.value.re, g.prec, "moment-series"));
      for (size_t k = 0; k < u.derivs.size(); ++k)
        rec["values"].push_back(
            entry("u^(" + std::to_string(k + 1) + ")(t)", u.derivs[k].re, g.prec));
      if (f_ode)
        rec["values"].push_back(entry("ode_residual", mgf_ode_residual(f_N, t, ctx), g.prec));
      emit(rec, g);
      return 0;
    }

    if (*c_st) {
      json rec = base_record("stieltjes", g);
      rec["params"] = {{"N", s_N}, {"t_re", s_tre}, {"t_im", s_tim}};
      BigComplex t(parse_real(s_tre, w), parse_real(s_tim, w));
      TransformValue W = stieltjes_value(s_N, t, 0, ctx);
      rec["values"].push_back(entry("Re W(t)", W.value.re, g.prec, "quadrature"));
      rec["values"].push_back(entry("Im W(t)", W.value.im, g.prec, "quadrature"));
      if (s_ode) {
        BigComplex res = stieltjes_ode_residual(s_N, t, ctx);
        rec["values"].push_back(entry("Re ode_residual", res.re, g.prec));
        rec["values"].push_back(entry("Im ode_residual", res.im, g.prec));
      }
      emit(rec, g);
      return 0;
    }

    if (*c_mc) {
      json rec = base_record("mc", g);
      MCConfig cfg;
      cfg.N = mc_N;
      cfg.n_samples = mc_samples;
      cfg.seed = g.seed;
      cfg.workers = mc_workers;
      cfg.realness_mode =
          mc_mode == "schur-blocks" ? RealnessMode::schur_blocks : RealnessMode::imag_threshold;
      if (!mc_dump.empty()) cfg.dump_path = mc_dump;
      std::vector<long> plist;
      {
        std::stringstream ss(mc_plist);
        std::string tok;
        while (std::getline(ss, tok, ',')) plist.push_back(std::stol(tok));
      }
      rec["params"] = {{"N", mc_N},
                       {"samples", mc_samples},
                       {"seed", g.seed},
                       {"workers", mc_workers},
                       {"p_list", plist},
                       {"realness_mode", mc_mode}};
      MCSummary s = empirical_real_moments(cfg, plist);
      for (const auto& st : s.moments) {
        json e;
        e["name"] = "mean sum x^(2p), p=" + std::to_string((long)st.p);
        e["value"] = st.mean;
        e["stderr"] = st.stderr_;
        long pl = (long)st.p;
        if (cfg.N >= 2) {
          BigReal ref = pl == 0 ? m0_hyp(cfg.N, ctx).value : moment_real(cfg.N, pl, ctx).value;
          e["reference"] = value_str(ref, 64);
        }
        rec["values"].push_back(e);
      }
      json hist = json::object();
      bool parity_ok = true;
      for (auto& [cnt, freq] : s.real_count_histogram) {
        hist[std::to_string(cnt)] = freq;
        if ((cnt - cfg.N) % 2 != 0) parity_ok = false;
      }
      rec["real_count_histogram"] = hist;
      rec["parity_ok"] = parity_ok;
      rec["eigensolver_failures"] = s.eigensolver_failures;
      emit(rec, g);
      return 0;
    }

    if (*c_ver) {
      bool full = v_full && !v_quick;
      return run_verify(full, g);
    }
  } catch (const InternalInconsistencyError& e) {
    json err = {{"error", e.what()}, {"exit_code", 5}};
    std::cout << err.dump() << "\n";
    return 5;
  } catch (const Error& e) {
    json err = {{"error", e.what()}, {"exit_code", e.exit_code()}};
    std::cout << err.dump() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    json err = {{"error", e.what()}, {"exit_code", 1}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 0;
}
