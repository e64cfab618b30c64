#include "ginoe/montecarlo.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace ginoe {

std::pair<double, double> GaussianStream::pair(std::uint64_t i) const {
  double u1 = rng.uniform(2 * i);
  double u2 = rng.uniform(2 * i + 1);
  double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

void GaussianStream::fill(double* out, std::size_t n) const {
  for (std::size_t i = 0; 2 * i < n; ++i) {
    auto [a, b] = pair(i);
    out[2 * i] = a;
    if (2 * i + 1 < n) out[2 * i + 1] = b;
  }
}

Matrix sample_ginoe(long N, std::uint64_t seed, std::uint64_t sample_id) {
  if (N < 1) throw DomainError("sample_ginoe: N must be >= 1");
  Matrix A(N);
  GaussianStream gs(seed, sample_id);
  gs.fill(A.a.data(), A.a.size());
  return A;
}

namespace {

struct SampleRecord {
  std::vector<double> moment_values;  // one per requested p
  long n_real = -1;                   // -1 marks an eigensolver failure
  std::vector<double> real_eigs;      // kept only when dumping or binning
};

// deterministic pairwise reduction over a fixed array layout
double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

MCSummary summarize(const MCConfig& cfg, const std::vector<long>& p_list,
                    const std::vector<SampleRecord>& recs, bool counts_are_real_eigs,
                    long density_bins, double density_halfwidth) {
  MCSummary out;
  out.N = cfg.N;
  out.n_samples = cfg.n_samples;
  out.seed = cfg.seed;
  size_t n = recs.size();
  for (size_t ip = 0; ip < p_list.size(); ++ip) {
    std::vector<double> vals(n, 0.0);
    for (size_t i = 0; i < n; ++i) vals[i] = recs[i].moment_values[ip];
    double mean = pairwise_sum(vals, 0, n) / (double)n;
    std::vector<double> sq(n, 0.0);
    for (size_t i = 0; i < n; ++i) sq[i] = (vals[i] - mean) * (vals[i] - mean);
    double var = pairwise_sum(sq, 0, n) / ((double)n - 1.0);
    MCMomentStat st;
    st.p = (double)p_list[ip];
    st.mean = mean;
    st.stderr_ = std::sqrt(var / (double)n);
    out.moments.push_back(st);
  }
  for (const auto& r : recs) {
    if (r.n_real < 0) {
      out.eigensolver_failures += 1;
      continue;
    }
    if (counts_are_real_eigs) out.real_count_histogram[r.n_real] += 1;
  }
  if (counts_are_real_eigs && density_bins > 0) {
    out.has_density = true;
    out.bin_lo = -density_halfwidth;
    out.bin_hi = density_halfwidth;
    out.bin_counts.assign((size_t)density_bins, 0.0);
    double width = (out.bin_hi - out.bin_lo) / (double)density_bins;
    for (const auto& r : recs)
      for (double x : r.real_eigs) {
        if (x < out.bin_lo || x >= out.bin_hi) continue;
        size_t b = (size_t)((x - out.bin_lo) / width);
        if (b < out.bin_counts.size()) out.bin_counts[b] += 1.0;
      }
  }
  return out;
}

void run_parallel(long n_samples, long workers, const std::function<void(long)>& body) {
  if (workers <= 1) {
    for (long i = 0; i < n_samples; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (n_samples + workers - 1) / workers;
  for (long wkr = 0; wkr < workers; ++wkr) {
    long lo = wkr * chunk;
    long hi = std::min(n_samples, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

MCSummary empirical_real_moments(const MCConfig& cfg, const std::vector<long>& p_list,
                                 long density_bins, double density_halfwidth) {
  if (cfg.n_samples < 1) throw DomainError("empirical_real_moments: n_samples must be >= 1");
  bool keep_eigs = cfg.dump_path.has_value() || density_bins > 0;
  std::vector<SampleRecord> recs((size_t)cfg.n_samples);
  run_parallel(cfg.n_samples, cfg.workers, [&](long i) {
    Matrix A = sample_ginoe(cfg.N, cfg.seed, (std::uint64_t)i);
    SampleRecord rec;
    rec.moment_values.assign(p_list.size(), 0.0);
    try {
      std::vector<double> re =
          real_eigenvalues(A, cfg.realness_mode, cfg.imag_threshold_eps);
      rec.n_real = (long)re.size();
      for (size_t ip = 0; ip < p_list.size(); ++ip) {
        double s = 0;
        for (double x : re) s += std::pow(x * x, (double)p_list[ip]);
        rec.moment_values[ip] = s;
      }
      if (keep_eigs) rec.real_eigs = std::move(re);
    } catch (const NonConvergenceError&) {
      rec.n_real = -1;  // reported, never silently dropped
    }
    recs[(size_t)i] = std::move(rec);
  });
  if (cfg.dump_path) {
    std::ofstream os(*cfg.dump_path);
    if (!os) throw Error("empirical_real_moments: cannot open dump file");
    for (size_t i = 0; i < recs.size(); ++i) {
      os << "{\"sample\":" << i << ",\"n_real\":" << recs[i].n_real << ",\"real_eigs\":[";
      for (size_t j = 0; j < recs[i].real_eigs.size(); ++j) {
        if (j) os << ",";
        std::ostringstream tmp;
        tmp.precision(17);
        tmp << recs[i].real_eigs[j];
        os << tmp.str();
      }
      os << "]}\n";
    }
  }
  return summarize(cfg, p_list, recs, true, density_bins, density_halfwidth);
}

MCSummary empirical_trace_moments(const MCConfig& cfg, const std::vector<long>& p_list) {
  if (cfg.n_samples < 1) throw DomainError("empirical_trace_moments: n_samples must be >= 1");
  std::vector<SampleRecord> recs((size_t)cfg.n_samples);
  run_parallel(cfg.n_samples, cfg.workers, [&](long i) {
    Matrix A = sample_ginoe(cfg.N, cfg.seed, (std::uint64_t)i);
    SampleRecord rec;
    rec.moment_values.assign(p_list.size(), 0.0);
    long n = A.n;
    // Tr G^{2p} by repeated squaring-free power: B = A^{2p} via p-1 products
    for (size_t ip = 0; ip < p_list.size(); ++ip) {
      long p = p_list[ip];
      Matrix B = A;
      // B = A^(2p): multiply 2p-1 times (N is small; clarity over speed)
      for (long rep = 1; rep < 2 * p; ++rep) {
        Matrix C(n);
        for (long r = 0; r < n; ++r)
          for (long k = 0; k < n; ++k) {
            double arc = B.at(r, k);
            if (arc == 0.0) continue;
            for (long c = 0; c < n; ++c) C.at(r, c) += arc * A.at(k, c);
          }
        B = C;
      }
      double tr = 0;
      for (long r = 0; r < n; ++r) tr += B.at(r, r);
      rec.moment_values[ip] = tr;
    }
    rec.n_real = 0;
    recs[(size_t)i] = std::move(rec);
  });
  return summarize(cfg, p_list, recs, false, 0, 0);
}

}  // namespace ginoe
