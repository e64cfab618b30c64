#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ginoe/moments.hpp"
#include "ginoe/density.hpp"
#include "ginoe/montecarlo.hpp"

using namespace ginoe;

TEST_CASE("sampler: mean/variance of entries, bit reproducibility") {
  long N = 8;
  double sum = 0, sumsq = 0;
  long count = 0;
  for (long s = 0; s < 16000; ++s) {
    Matrix A = sample_ginoe(N, 42, (std::uint64_t)s);
    for (double v : A.a) {
      sum += v;
      sumsq += v * v;
      ++count;
    }
  }
  double mean = sum / count;
  double var = sumsq / count - mean * mean;
  CHECK(std::abs(mean) < 4e-3);
  CHECK(std::abs(var - 1.0) < 1e-2);
  Matrix A1 = sample_ginoe(5, 7, 123);
  Matrix A2 = sample_ginoe(5, 7, 123);
  CHECK(A1.a == A2.a);  // bit-for-bit
  Matrix A3 = sample_ginoe(5, 8, 123);
  CHECK(A1.a != A3.a);
}

TEST_CASE("eigensolver: triangular, rotation, companion matrices") {
  Matrix T(2);
  T.at(0, 0) = 1;
  T.at(0, 1) = 2;
  T.at(1, 1) = 3;
  auto ev = real_eigenvalues(T, RealnessMode::schur_blocks);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));

  Matrix R(2);
  R.at(0, 1) = -1;
  R.at(1, 0) = 1;
  CHECK(real_eigenvalues(R, RealnessMode::schur_blocks).empty());

  // companion matrix of (x-2)(x^2+1) = x^3 - 2x^2 + x - 2
  Matrix C2(3);
  C2.at(0, 2) = 2;
  C2.at(1, 2) = -1;
  C2.at(2, 2) = 2;
  C2.at(1, 0) = 1;
  C2.at(2, 1) = 1;
  auto ev2 = real_eigenvalues(C2, RealnessMode::schur_blocks);
  REQUIRE(ev2.size() == 1);
  CHECK(ev2[0] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("eigensolver validation on planted companion spectra") {
  std::vector<double> roots = {-3.5, -1.25, 0.5, 2.0, 4.75};
  long n = (long)roots.size();
  // monic polynomial coefficients from the roots
  std::vector<double> coef(n + 1, 0.0);
  coef[0] = 1.0;
  long deg = 0;
  for (double r : roots) {
    ++deg;
    for (long k = deg; k >= 1; --k) coef[k] = coef[k] - r * (k > 0 ? coef[k - 1] : 0.0);
  }
  // companion matrix (last column = -coef of x^0..x^{n-1} reversed)
  Matrix C(n);
  for (long i = 1; i < n; ++i) C.at(i, i - 1) = 1.0;
  for (long i = 0; i < n; ++i) C.at(i, n - 1) = -coef[n - i];
  auto ev = real_eigenvalues(C, RealnessMode::schur_blocks);
  REQUIRE(ev.size() == roots.size());
  std::sort(roots.begin(), roots.end());
  for (size_t i = 0; i < roots.size(); ++i)
    CHECK(std::abs(ev[i] - roots[i]) < 1e-10 * std::max(1.0, std::abs(roots[i])));
}

TEST_CASE("empirical real moments: exact values within 4 sigma; parity") {
  PrecisionContext ctx(96);
  MCConfig cfg;
  cfg.N = 2;
  cfg.n_samples = 100000;
  cfg.seed = 20260810;
  cfg.workers = 4;
  MCSummary s = empirical_real_moments(cfg, {0, 1});
  double m0 = std::sqrt(2.0);
  CHECK(std::abs(s.moments[0].mean - m0) < 4.0 * s.moments[0].stderr_);
  double m2 = moment_real(2, 1L, ctx).value.to_double();
  CHECK(std::abs(s.moments[1].mean - m2) < 4.0 * s.moments[1].stderr_);
  long total = 0;
  for (auto& [cnt, freq] : s.real_count_histogram) {
    CHECK((cnt - cfg.N) % 2 == 0);
    total += freq;
  }
  CHECK(total == cfg.n_samples);
  CHECK(s.eigensolver_failures == 0);
}

TEST_CASE("worker-count independence, bit identical") {
  MCConfig a;
  a.N = 6;
  a.n_samples = 4000;
  a.seed = 977;
  a.workers = 1;
  MCConfig b = a;
  b.workers = 4;
  MCConfig c = a;
  c.workers = 16;
  MCSummary sa = empirical_real_moments(a, {0, 1, 2});
  MCSummary sb = empirical_real_moments(b, {0, 1, 2});
  MCSummary sc = empirical_real_moments(c, {0, 1, 2});
  for (size_t i = 0; i < sa.moments.size(); ++i) {
    CHECK(sa.moments[i].mean == sb.moments[i].mean);
    CHECK(sa.moments[i].stderr_ == sb.moments[i].stderr_);
    CHECK(sa.moments[i].mean == sc.moments[i].mean);
  }
  CHECK(sa.real_count_histogram == sb.real_count_histogram);
  CHECK(sa.real_count_histogram == sc.real_count_histogram);
}

TEST_CASE("realness modes agree on GinOE samples") {
  MCConfig a;
  a.N = 5;
  a.n_samples = 3000;
  a.seed = 31337;
  a.realness_mode = RealnessMode::schur_blocks;
  MCConfig b = a;
  b.realness_mode = RealnessMode::imag_threshold;
  MCSummary sa = empirical_real_moments(a, {0});
  MCSummary sb = empirical_real_moments(b, {0});
  CHECK(sa.moments[0].mean == sb.moments[0].mean);
}

TEST_CASE("trace moments against the exact product") {
  MCConfig cfg;
  cfg.N = 4;
  cfg.n_samples = 60000;
  cfg.seed = 5150;
  cfg.workers = 4;
  MCSummary s = empirical_trace_moments(cfg, {1, 2});
  CHECK(std::abs(s.moments[0].mean - 4.0) < 4.0 * s.moments[0].stderr_);
  CHECK(std::abs(s.moments[1].mean - 24.0) < 4.0 * s.moments[1].stderr_);
  MCConfig c2;
  c2.N = 2;
  c2.n_samples = 60000;
  c2.seed = 5151;
  MCSummary s2 = empirical_trace_moments(c2, {1});
  CHECK(std::abs(s2.moments[0].mean - 2.0) < 4.0 * s2.moments[0].stderr_);
  MCConfig c3;
  c3.N = 3;
  c3.n_samples = 60000;
  c3.seed = 5152;
  MCSummary s3 = empirical_trace_moments(c3, {3});
  CHECK(std::abs(s3.moments[0].mean - 105.0) < 4.0 * s3.moments[0].stderr_);
}

TEST_CASE("binned empirical density matches rho_real within 5 sigma per bin") {
  PrecisionContext ctx(96);
  MCConfig cfg;
  cfg.N = 8;
  cfg.n_samples = 100000;
  cfg.seed = 424242;
  cfg.workers = 4;
  long bins = 40;
  double half = 4.0;
  MCSummary s = empirical_real_moments(cfg, {0}, bins, half);
  REQUIRE(s.has_density);
  double width = 2.0 * half / (double)bins;
  for (long b = 0; b < bins; ++b) {
    double xc = -half + width * ((double)b + 0.5);
    double expect =
        rho_real(8, BigReal::from_double(xc, ctx.working_bits()), ctx).to_double() * width *
        (double)cfg.n_samples;
    double got = s.bin_counts[(size_t)b];
    double sigma = std::sqrt(std::max(expect, 1.0));  // Poisson-scale deviation
    CAPTURE(b);
    CHECK(std::abs(got - expect) < 5.0 * sigma);
  }
}

TEST_CASE("raw-sample dump is line-delimited and complete") {
  MCConfig cfg;
  cfg.N = 3;
  cfg.n_samples = 50;
  cfg.seed = 99;
  cfg.dump_path = "/tmp/ginoe_dump_test.jsonl";
  MCSummary s = empirical_real_moments(cfg, {0});
  (void)s;
  std::ifstream is(*cfg.dump_path);
  REQUIRE(is.good());
  std::string line;
  long lines = 0;
  while (std::getline(is, line)) {
    CHECK(line.find("\"sample\":") != std::string::npos);
    CHECK(line.find("\"n_real\":") != std::string::npos);
    ++lines;
  }
  CHECK(lines == cfg.n_samples);
  std::remove(cfg.dump_path->c_str());
}
