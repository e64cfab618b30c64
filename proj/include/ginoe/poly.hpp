#ifndef GINOE_POLY_HPP
#define GINOE_POLY_HPP

#include <utility>
#include <vector>

#include "ginoe/bigreal.hpp"
#include "ginoe/rational.hpp"

namespace ginoe {

// Dense polynomial over exact rationals; coeffs[k] multiplies t^k.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly zero() { return Poly{}; }
  static Poly constant(const Rational& q) { return Poly({q}); }
  static Poly monomial(const Rational& q, size_t deg) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = q;
    return Poly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return (long)c.size() - 1; }  // -1 for zero poly
  Rational coeff(size_t k) const { return k < c.size() ? c[k] : Rational(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> v = a.c;
    for (auto& q : v) q = -q;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rational> v(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> v = a.c;
    for (auto& q : v) q *= s;
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  Poly derivative() const {
    if (c.size() <= 1) return Poly{};
    std::vector<Rational> v(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) v[k - 1] = Rational((long)k) * c[k];
    return Poly(std::move(v));
  }
  Poly shift_up(size_t m) const {  // multiply by t^m
    if (is_zero()) return Poly{};
    std::vector<Rational> v(c.size() + m, Rational(0));
    for (size_t k = 0; k < c.size(); ++k) v[k + m] = c[k];
    return Poly(std::move(v));
  }
  // substitute t -> t + s (rational s), exact
  Poly taylor_shift(const Rational& s) const;
  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
  }
  BigReal eval(const BigReal& x) const {
    BigReal r = BigReal::zero(x.prec());
    for (size_t k = c.size(); k-- > 0;) r = r * x + BigReal::from_rational(c[k], x.prec());
    return r;
  }
  bool is_even() const {
    for (size_t k = 1; k < c.size(); k += 2)
      if (c[k] != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (size_t k = 0; k < c.size(); k += 2)
      if (c[k] != 0) return false;
    return true;
  }
};

// A function R(t) sinh t + S(t) cosh t represented by the polynomial pair.
// Differentiation maps (R, S) -> (R' + S, R + S').
struct PolyPair {
  Poly R;  // sinh coefficient
  Poly S;  // cosh coefficient

  PolyPair derivative() const { return {R.derivative() + S, R + S.derivative()}; }
  friend PolyPair operator+(const PolyPair& a, const PolyPair& b) {
    return {a.R + b.R, a.S + b.S};
  }
  friend PolyPair operator-(const PolyPair& a, const PolyPair& b) {
    return {a.R - b.R, a.S - b.S};
  }
  friend PolyPair operator*(const Poly& p, const PolyPair& a) { return {p * a.R, p * a.S}; }
  friend PolyPair operator*(const Rational& s, const PolyPair& a) { return {s * a.R, s * a.S}; }
  bool is_zero() const { return R.is_zero() && S.is_zero(); }
};

// Linear differential operator with polynomial coefficients:
// sum_k coeff[k](t) d^k/dt^k.
struct DiffOp {
  std::vector<Poly> coeff;  // index = derivative order

  static DiffOp from_terms(std::vector<std::pair<Poly, size_t>> terms) {
    DiffOp op;
    for (auto& [p, k] : terms) {
      if (op.coeff.size() <= k) op.coeff.resize(k + 1);
      op.coeff[k] = op.coeff[k] + p;
    }
    return op;
  }

  PolyPair apply(const PolyPair& f) const {
    PolyPair d = f;
    PolyPair out{Poly{}, Poly{}};
    for (size_t k = 0; k < coeff.size(); ++k) {
      if (k > 0) d = d.derivative();
      if (!coeff[k].is_zero()) out = out + coeff[k] * d;
    }
    return out;
  }

  // operator composition: (this o g), exact
  DiffOp compose(const DiffOp& g) const;
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Rational& s, const DiffOp& op) {
    DiffOp r = op;
    for (auto& p : r.coeff) p = s * p;
    return r;
  }
};

// Exact RREF of an augmented system A x = rhs.  Returns the particular
// solution with all free variables set to zero, plus the list of free column
// indices; throws InternalInconsistencyError if the system is inconsistent.
struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<size_t> free_columns;
  // kernel basis vector for a given free column (unit there, pivots filled)
  std::vector<Rational> kernel_for(size_t free_col) const;
  // internal: reduced rows, pivot columns (kept for kernel_for)
  std::vector<std::vector<Rational>> rref_rows;
  std::vector<size_t> pivot_cols;
  size_t ncols = 0;
};

LinearSolution solve_exact(std::vector<std::vector<Rational>> aug_rows, size_t ncols);

}  // namespace ginoe

#endif
