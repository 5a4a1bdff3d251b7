#include <stdexcept>

#include "pcg/simplex.hpp"

namespace pcg {

namespace {

// Dense tableau over columns [0,n) structural, n artificial, (n, n+m] slacks,
// last column rhs. obj is the reduced-cost row; obj.back() tracks -x0.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;
  std::vector<size_t> basis;

  void pivot(size_t r, size_t c) {
    Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (size_t j = 0; j < obj.size(); ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("lp_feasible: |A| != |b|");
  size_t n = m ? A[0].size() : 0;
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("lp_feasible: ragged matrix");
  if (m == 0) return std::vector<Rational>(n, 0);

  bool start_feasible = true;
  for (const auto& v : b)
    if (v < 0) start_feasible = false;
  if (start_feasible) return std::vector<Rational>(n, 0);

  size_t art = n, cols = n + 1 + m;
  Tableau t;
  t.rows.assign(m, std::vector<Rational>(cols + 1, 0));
  t.obj.assign(cols + 1, 0);
  t.basis.resize(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t.rows[i][j] = A[i][j];
    t.rows[i][art] = -1;
    t.rows[i][art + 1 + i] = 1;
    t.rows[i][cols] = b[i];
    t.basis[i] = art + 1 + i;
  }
  t.obj[art] = 1;  // maximize -x0

  // One special pivot on the most negative rhs makes the basis feasible.
  size_t r0 = 0;
  for (size_t i = 1; i < m; ++i)
    if (t.rows[i][cols] < t.rows[r0][cols]) r0 = i;
  t.pivot(r0, art);

  for (;;) {
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (t.obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;  // optimal
    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (t.rows[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rational cur = t.rows[i][cols] / t.rows[i][enter];
      Rational best = t.rows[leave][cols] / t.rows[leave][enter];
      if (cur < best || (cur == best && t.basis[i] < t.basis[leave])) leave = i;
    }
    if (leave == m) throw std::logic_error("lp_feasible: phase-1 unbounded");
    t.pivot(leave, enter);
  }

  if (t.obj[cols] != 0) return std::nullopt;  // minimum of x0 is positive
  std::vector<Rational> x(n, 0);
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) x[t.basis[i]] = t.rows[i][cols];
  return x;
}

}  // namespace pcg
