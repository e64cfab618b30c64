#include "ginoe/recognize.hpp"

#include <array>
#include <vector>

namespace ginoe {

namespace {

using Vec = std::array<Integer, 4>;

Rational dot(const Vec& a, const Vec& b) {
  Integer s(0);
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return Rational(s);
}

Integer round_rational(const Rational& q) {
  // nearest integer: floor(q + 1/2)
  Rational h = q + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return out;
}

// Textbook LLL (delta = 0.99) on a rank-3 lattice of 4-dimensional integer
// vectors; dimensions are tiny so Gram-Schmidt is recomputed on demand.
void lll_reduce(std::vector<Vec>& b) {
  const Rational delta(99, 100);
  auto gso = [&](std::vector<std::array<Rational, 3>>& mu, std::vector<Rational>& B) {
    // orthogonal vectors expressed via mu only (norms B, coefficients mu)
    std::vector<std::array<Rational, 4>> star(3);
    for (int i = 0; i < 3; ++i) {
      std::array<Rational, 4> v;
      for (int k = 0; k < 4; ++k) v[k] = Rational(b[i][k]);
      for (int j = 0; j < i; ++j) {
        Rational num(0);
        for (int k = 0; k < 4; ++k) num += Rational(b[i][k]) * star[j][k];
        mu[i][j] = B[j] == 0 ? Rational(0) : num / B[j];
        for (int k = 0; k < 4; ++k) v[k] -= mu[i][j] * star[j][k];
      }
      star[i] = v;
      Rational n(0);
      for (int k = 0; k < 4; ++k) n += v[k] * v[k];
      B[i] = n;
    }
  };
  std::vector<std::array<Rational, 3>> mu(3);
  std::vector<Rational> B(3);
  int k = 1;
  int guard = 0;
  while (k < 3 && ++guard < 10000) {
    gso(mu, B);
    for (int j = k - 1; j >= 0; --j) {
      Integer r = round_rational(mu[k][j]);
      if (r != 0) {
        for (int t = 0; t < 4; ++t) b[k][t] -= r * b[j][t];
        gso(mu, B);
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = std::max(1, k - 1);
    }
  }
}

}  // namespace

std::optional<Sqrt2Rational> recognize_sqrt2(const BigReal& x) {
  long prec = x.prec();
  long kexp = prec - 40;
  if (kexp < 64) return std::nullopt;

  mpfr_t s2, scaled;
  mpfr_init2(s2, prec + 16);
  mpfr_init2(scaled, prec + 16);
  mpfr_sqrt_ui(s2, 2, MPFR_RNDN);

  auto scaled_int = [&](mpfr_srcptr v) {
    mpfr_mul_2si(scaled, v, kexp, MPFR_RNDN);
    Integer z;
    mpfr_get_z(z.get_mpz_t(), scaled, MPFR_RNDN);
    return z;
  };

  std::vector<Vec> basis(3);
  basis[0] = {Integer(1), Integer(0), Integer(0), Integer(1) << kexp};
  basis[1] = {Integer(0), Integer(1), Integer(0), scaled_int(s2)};
  basis[2] = {Integer(0), Integer(0), Integer(1), scaled_int(x.value())};
  mpfr_clears(s2, scaled, (mpfr_ptr)0);

  lll_reduce(basis);

  // smallest vector with a nonzero x-coefficient
  const Vec* best = nullptr;
  Rational best_norm(0);
  for (const auto& v : basis) {
    if (v[2] == 0) continue;
    Rational n = dot(v, v);
    if (!best || n < best_norm) {
      best = &v;
      best_norm = n;
    }
  }
  if (!best) return std::nullopt;
  Rational a(-(*best)[0], (*best)[2]);
  Rational b(-(*best)[1], (*best)[2]);
  a.canonicalize();
  b.canonicalize();
  return Sqrt2Rational{a, b};
}

}  // namespace ginoe
