#include "ginoe/schur.hpp"

#include <algorithm>
#include <cmath>

namespace ginoe {

namespace {

double sign_of(double a, double b) { return b >= 0 ? std::abs(a) : -std::abs(a); }

// Householder reduction to upper Hessenberg form (values only).
void hessenberg(Matrix& A) {
  long n = A.n;
  for (long k = 1; k < n - 1; ++k) {
    double scale = 0.0;
    for (long i = k; i < n; ++i) scale += std::abs(A.at(i, k - 1));
    if (scale == 0.0) continue;
    double h = 0.0;
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    for (long i = k; i < n; ++i) {
      v[i] = A.at(i, k - 1) / scale;
      h += v[i] * v[i];
    }
    double g = v[k] >= 0 ? -std::sqrt(h) : std::sqrt(h);
    h -= v[k] * g;
    v[k] -= g;
    for (long j = 0; j < n; ++j) {
      double f = 0.0;
      for (long i = k; i < n; ++i) f += v[i] * A.at(i, j);
      f /= h;
      for (long i = k; i < n; ++i) A.at(i, j) -= f * v[i];
    }
    for (long i = 0; i < n; ++i) {
      double f = 0.0;
      for (long j = k; j < n; ++j) f += A.at(i, j) * v[j];
      f /= h;
      for (long j = k; j < n; ++j) A.at(i, j) -= f * v[j];
    }
    A.at(k, k - 1) = scale * g;
    for (long i = k + 1; i < n; ++i) A.at(i, k - 1) = 0.0;
  }
}

}  // namespace

Eigenvalues eigenvalues_real_schur(Matrix A) {
  long n = A.n;
  Eigenvalues ev;
  ev.re.assign(static_cast<size_t>(n), 0.0);
  ev.im.assign(static_cast<size_t>(n), 0.0);
  if (n == 0) return ev;
  if (n == 1) {
    ev.re[0] = A.at(0, 0);
    return ev;
  }
  hessenberg(A);

  double anorm = 0.0;
  for (long i = 0; i < n; ++i)
    for (long j = std::max(i - 1, 0L); j < n; ++j) anorm += std::abs(A.at(i, j));
  if (anorm == 0.0) return ev;

  long nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    long its = 0;
    long l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(A.at(l - 1, l - 1)) + std::abs(A.at(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(A.at(l, l - 1)) + s == s) {
          A.at(l, l - 1) = 0.0;
          break;
        }
      }
      double x = A.at(nn, nn);
      if (l == nn) {
        ev.re[static_cast<size_t>(nn)] = x + t;
        ev.im[static_cast<size_t>(nn)] = 0.0;
        nn -= 1;
      } else {
        double y = A.at(nn - 1, nn - 1);
        double w = A.at(nn, nn - 1) * A.at(nn - 1, nn);
        if (l == nn - 1) {
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            ev.re[static_cast<size_t>(nn - 1)] = ev.re[static_cast<size_t>(nn)] = x + z;
            if (z != 0.0) ev.re[static_cast<size_t>(nn)] = x - w / z;
            ev.im[static_cast<size_t>(nn - 1)] = ev.im[static_cast<size_t>(nn)] = 0.0;
          } else {
            ev.re[static_cast<size_t>(nn - 1)] = ev.re[static_cast<size_t>(nn)] = x + p;
            ev.im[static_cast<size_t>(nn)] = z;
            ev.im[static_cast<size_t>(nn - 1)] = -z;
          }
          nn -= 2;
        } else {
          if (its == 40)
            throw NonConvergenceError("eigenvalues_real_schur: QR iteration cap reached");
          if (its == 10 || its == 20 || its == 30) {
            t += x;
            for (long i = 0; i <= nn; ++i) A.at(i, i) -= x;
            double s = std::abs(A.at(nn, nn - 1)) + std::abs(A.at(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          long m;
          double p = 0, q = 0, r = 0;
          for (m = nn - 2; m >= l; --m) {
            double z = A.at(m, m);
            double rr = x - z;
            double ss = y - z;
            p = (rr * ss - w) / A.at(m + 1, m) + A.at(m, m + 1);
            q = A.at(m + 1, m + 1) - z - rr - ss;
            r = A.at(m + 2, m + 1);
            double s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            double u = std::abs(A.at(m, m - 1)) * (std::abs(q) + std::abs(r));
            double v = std::abs(p) *
                       (std::abs(A.at(m - 1, m - 1)) + std::abs(z) + std::abs(A.at(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (long i = m + 2; i <= nn; ++i) {
            A.at(i, i - 2) = 0.0;
            if (i != m + 2) A.at(i, i - 3) = 0.0;
          }
          for (long k = m; k <= nn - 1; ++k) {
            double x2 = 0.0;
            if (k != m) {
              p = A.at(k, k - 1);
              q = A.at(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = A.at(k + 2, k - 1);
              x2 = std::abs(p) + std::abs(q) + std::abs(r);
              if (x2 != 0.0) {
                p /= x2;
                q /= x2;
                r /= x2;
              }
            }
            double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) A.at(k, k - 1) = -A.at(k, k - 1);
            } else {
              A.at(k, k - 1) = -s * x2;
            }
            p += s;
            double x3 = p / s;
            double y3 = q / s;
            double z3 = r / s;
            q /= p;
            r /= p;
            for (long j = k; j <= nn; ++j) {
              double pp = A.at(k, j) + q * A.at(k + 1, j);
              if (k != nn - 1) {
                pp += r * A.at(k + 2, j);
                A.at(k + 2, j) -= pp * z3;
              }
              A.at(k + 1, j) -= pp * y3;
              A.at(k, j) -= pp * x3;
            }
            long mmin = nn < k + 3 ? nn : k + 3;
            for (long i = l; i <= mmin; ++i) {
              double pp = x3 * A.at(i, k) + y3 * A.at(i, k + 1);
              if (k != nn - 1) {
                pp += z3 * A.at(i, k + 2);
                A.at(i, k + 2) -= pp * r;
              }
              A.at(i, k + 1) -= pp * q;
              A.at(i, k) -= pp;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return ev;
}

std::vector<double> real_eigenvalues(const Matrix& A, RealnessMode mode, double eps) {
  if (A.n == 0) return {};
  Eigenvalues ev = eigenvalues_real_schur(A);
  std::vector<double> out;
  if (mode == RealnessMode::schur_blocks) {
    for (size_t i = 0; i < ev.re.size(); ++i)
      if (ev.im[i] == 0.0) out.push_back(ev.re[i]);
  } else {
    double fn = 0.0;
    for (double v : A.a) fn += v * v;
    fn = std::sqrt(fn);
    for (size_t i = 0; i < ev.re.size(); ++i)
      if (std::abs(ev.im[i]) <= eps * fn) out.push_back(ev.re[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ginoe
