#ifndef GINOE_MONTECARLO_HPP
#define GINOE_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ginoe/philox.hpp"
#include "ginoe/schur.hpp"

namespace ginoe {

struct MCConfig {
  long N = 2;
  long n_samples = 10000;
  std::uint64_t seed = 1;
  long workers = 1;
  RealnessMode realness_mode = RealnessMode::schur_blocks;
  double imag_threshold_eps = 1e-9;
  std::optional<std::string> dump_path;  // JSONL: one record per sample
};

struct MCMomentStat {
  double p = 0;        // moment order (sum of x^{2p} over real eigenvalues)
  double mean = 0;
  double stderr_ = 0;  // standard error of the mean
};

struct MCSummary {
  long N = 0;
  long n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<MCMomentStat> moments;
  std::map<long, long> real_count_histogram;
  long eigensolver_failures = 0;
  // optional binned empirical density of real eigenvalues
  bool has_density = false;
  double bin_lo = 0, bin_hi = 0;
  std::vector<double> bin_counts;  // raw counts per bin, all samples pooled
};

// N x N matrix of i.i.d. standard normals from the (seed, sample_id) stream.
Matrix sample_ginoe(long N, std::uint64_t seed, std::uint64_t sample_id);

// Mean and standard error of sum_j x_j^{2p} over real eigenvalues, for each
// p in p_list; bit-reproducible for fixed (seed, n_samples, N) regardless of
// the worker count.
MCSummary empirical_real_moments(const MCConfig& cfg, const std::vector<long>& p_list,
                                 long density_bins = 0, double density_halfwidth = 0);

// Mean and standard error of Tr G^{2p}.
MCSummary empirical_trace_moments(const MCConfig& cfg, const std::vector<long>& p_list);

}  // namespace ginoe

#endif
