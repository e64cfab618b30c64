#include "ginoe/poly.hpp"

namespace ginoe {

Poly Poly::taylor_shift(const Rational& s) const {
  // Horner in the shifted variable: p(t+s)
  Poly out;
  for (size_t k = c.size(); k-- > 0;) {
    // out = out * (t + s) + c[k]
    Poly shifted = out.shift_up(1) + s * out;
    out = shifted + Poly::constant(c[k]);
  }
  return out;
}

DiffOp DiffOp::compose(const DiffOp& g) const {
  // (p d^k) o (q d^j) = p * sum_{i<=k} C(k,i) q^{(i)} d^{k-i+j}
  DiffOp out;
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k].is_zero()) continue;
    for (size_t j = 0; j < g.coeff.size(); ++j) {
      if (g.coeff[j].is_zero()) continue;
      Poly qder = g.coeff[j];
      Rational binom(1);
      for (size_t i = 0; i <= k; ++i) {
        if (i > 0) {
          qder = qder.derivative();
          binom = binom * Rational((long)(k - i + 1)) / Rational((long)i);
        }
        if (qder.is_zero()) break;
        size_t ord = k - i + j;
        if (out.coeff.size() <= ord) out.coeff.resize(ord + 1);
        out.coeff[ord] = out.coeff[ord] + binom * (coeff[k] * qder);
      }
    }
  }
  for (auto& p : out.coeff) p.trim();
  while (!out.coeff.empty() && out.coeff.back().is_zero()) out.coeff.pop_back();
  return out;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  size_t n = std::max(a.coeff.size(), b.coeff.size());
  for (size_t k = 0; k < n; ++k) {
    Poly pa = k < a.coeff.size() ? a.coeff[k] : Poly{};
    Poly pb = k < b.coeff.size() ? b.coeff[k] : Poly{};
    if (!(pa == pb)) return false;
  }
  return true;
}

LinearSolution solve_exact(std::vector<std::vector<Rational>> rows, size_t ncols) {
  size_t nrows = rows.size();
  size_t lead = 0;
  std::vector<size_t> pivots;
  for (size_t r = 0; r < nrows && lead < ncols; ++r) {
    size_t i = r;
    while (i < nrows && rows[i][lead] == 0) {
      ++i;
      if (i == nrows) {
        i = r;
        ++lead;
        if (lead == ncols) goto done;
      }
    }
    std::swap(rows[i], rows[r]);
    Rational inv = Rational(1) / rows[r][lead];
    for (auto& q : rows[r]) q *= inv;
    for (size_t j = 0; j < nrows; ++j) {
      if (j == r) continue;
      if (rows[j][lead] == 0) continue;
      Rational f = rows[j][lead];
      for (size_t k2 = lead; k2 <= ncols; ++k2) rows[j][k2] -= f * rows[r][k2];
    }
    pivots.push_back(lead);
    ++lead;
  }
done:
  // inconsistency: a zero row with nonzero rhs
  for (size_t r = pivots.size(); r < nrows; ++r) {
    bool allz = true;
    for (size_t k = 0; k < ncols; ++k)
      if (rows[r][k] != 0) { allz = false; break; }
    if (allz && rows[r][ncols] != 0)
      throw InternalInconsistencyError("solve_exact: inconsistent linear system");
  }
  LinearSolution sol;
  sol.ncols = ncols;
  sol.pivot_cols = pivots;
  sol.particular.assign(ncols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = rows[r][ncols];
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  for (size_t k = 0; k < ncols; ++k)
    if (!is_pivot[k]) sol.free_columns.push_back(k);
  sol.rref_rows.assign(rows.begin(), rows.begin() + pivots.size());
  return sol;
}

std::vector<Rational> LinearSolution::kernel_for(size_t free_col) const {
  std::vector<Rational> v(ncols, Rational(0));
  v[free_col] = 1;
  for (size_t r = 0; r < pivot_cols.size(); ++r)
    v[pivot_cols[r]] = -rref_rows[r][free_col];
  return v;
}

}  // namespace ginoe
