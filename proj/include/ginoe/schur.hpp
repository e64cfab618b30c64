#ifndef GINOE_SCHUR_HPP
#define GINOE_SCHUR_HPP

#include <vector>

#include "ginoe/errors.hpp"

namespace ginoe {

// Dense row-major real matrix, double precision.
struct Matrix {
  long n = 0;
  std::vector<double> a;
  explicit Matrix(long n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
  double& at(long i, long j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(long i, long j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct Eigenvalues {
  std::vector<double> re;
  std::vector<double> im;  // exactly 0.0 for eigenvalues converged as 1x1 blocks
};

// Eigenvalues by Householder Hessenberg reduction followed by the Francis
// double-shift QR iteration.  1x1 blocks of the quasi-triangular form are
// reported with im = 0 exactly (structural realness classification).
// Throws NonConvergenceError if a block exceeds the iteration cap.
Eigenvalues eigenvalues_real_schur(Matrix A);

enum class RealnessMode { schur_blocks, imag_threshold };

// Sorted real eigenvalues.  schur_blocks: im == 0 exactly; imag_threshold:
// |im| <= eps * frobenius_norm.
std::vector<double> real_eigenvalues(const Matrix& A, RealnessMode mode,
                                     double eps = 1e-9);

}  // namespace ginoe

#endif
