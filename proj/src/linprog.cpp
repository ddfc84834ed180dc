#include "tropj/linprog.hpp"

#include <stdexcept>

namespace tropj {

namespace {

// Dense simplex tableau.  Rows: m constraints plus objective row at index m.
// Columns: n variables plus rhs column at index n.
struct Tableau {
  size_t m, n;
  std::vector<std::vector<Rational>> t;
  std::vector<size_t> basis;

  Tableau(size_t m_, size_t n_) : m(m_), n(n_), t(m_ + 1, std::vector<Rational>(n_ + 1)), basis(m_) {}

  void pivot(size_t r, size_t c) {
    Rational p = t[r][c];
    for (size_t j = 0; j <= n; ++j) t[r][j] /= p;
    for (size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimize the objective row.  Bland's rule keeps it finite.
  LpStatus run() {
    for (;;) {
      size_t enter = n;
      for (size_t j = 0; j < n; ++j)
        if (t[m][j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == n) return LpStatus::Optimal;
      size_t leave = m;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter].sign() <= 0) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        Rational cur = t[i][n] / t[i][enter];
        Rational best = t[leave][n] / t[leave][enter];
        if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c) {
  size_t m = A.size(), n = c.size();
  for (auto& row : A)
    if (row.size() != n) throw std::invalid_argument("lp row arity mismatch");
  if (b.size() != m) throw std::invalid_argument("lp rhs arity mismatch");

  // Phase 1: artificial variables, rhs made nonnegative.
  Tableau tab(m, n + m);
  for (size_t i = 0; i < m; ++i) {
    bool neg = b[i].sign() < 0;
    for (size_t j = 0; j < n; ++j) tab.t[i][j] = neg ? -A[i][j] : A[i][j];
    tab.t[i][n + i] = Rational(1);
    tab.t[i][tab.n] = neg ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }
  for (size_t j = 0; j < n; ++j) {
    Rational s(0);
    for (size_t i = 0; i < m; ++i) s += tab.t[i][j];
    tab.t[m][j] = -s;
  }
  {
    Rational s(0);
    for (size_t i = 0; i < m; ++i) s += tab.t[i][tab.n];
    tab.t[m][tab.n] = -s;
  }
  tab.run();
  if (tab.t[m][tab.n].sign() != 0) return {LpStatus::Infeasible, {}, Rational(0)};

  // Pivot leftover artificials out of the basis where possible.
  for (size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    size_t c2 = n;
    for (size_t j = 0; j < n; ++j)
      if (tab.t[i][j].sign() != 0) {
        c2 = j;
        break;
      }
    if (c2 < n) tab.pivot(i, c2);
  }

  // Phase 2 on the original columns.
  Tableau t2(m, n);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t2.t[i][j] = tab.t[i][j];
    t2.t[i][n] = tab.t[i][tab.n];
    t2.basis[i] = tab.basis[i] < n ? tab.basis[i] : n;  // degenerate artificial row
  }
  // Degenerate rows with an artificial still basic are all-zero on real
  // columns; they stay inert.  Give them an out-of-range basis marker.
  for (size_t j = 0; j < n; ++j) t2.t[m][j] = c[j];
  t2.t[m][n] = Rational(0);
  for (size_t i = 0; i < m; ++i) {
    if (t2.basis[i] >= n) continue;
    Rational f = t2.t[m][t2.basis[i]];
    if (f.is_zero()) continue;
    for (size_t j = 0; j <= n; ++j) t2.t[m][j] -= f * t2.t[i][j];
  }
  LpStatus st = t2.run();
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, Rational(0)};
  std::vector<Rational> x(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (t2.basis[i] < n) x[t2.basis[i]] = t2.t[i][n];
  return {LpStatus::Optimal, std::move(x), -t2.t[m][n]};
}

bool in_convex_hull(const std::vector<std::vector<Rational>>& pts,
                    const std::vector<Rational>& target) {
  if (pts.empty()) return false;
  size_t d = target.size(), n = pts.size();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(n));
  std::vector<Rational> b(d + 1), c(n, Rational(0));
  for (size_t k = 0; k < n; ++k) {
    if (pts[k].size() != d) throw std::invalid_argument("hull point arity mismatch");
    for (size_t i = 0; i < d; ++i) A[i][k] = pts[k][i];
    A[d][k] = Rational(1);
  }
  for (size_t i = 0; i < d; ++i) b[i] = target[i];
  b[d] = Rational(1);
  return simplex_solve(A, b, c).status == LpStatus::Optimal;
}

std::optional<std::vector<Rational>> solve_constraints(
    const std::vector<LinearConstraint>& cons, size_t nvars) {
  // Free variables split into positive and negative parts; inequality rows
  // a.x >= rhs get a surplus variable.
  size_t nslack = 0;
  for (auto& con : cons)
    if (!con.equality) ++nslack;
  size_t n = 2 * nvars + nslack;
  std::vector<std::vector<Rational>> A(cons.size(), std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(cons.size()), c(n, Rational(0));
  size_t s = 0;
  for (size_t i = 0; i < cons.size(); ++i) {
    if (cons[i].a.size() != nvars) throw std::invalid_argument("constraint arity mismatch");
    for (size_t j = 0; j < nvars; ++j) {
      A[i][2 * j] = cons[i].a[j];
      A[i][2 * j + 1] = -cons[i].a[j];
    }
    if (!cons[i].equality) A[i][2 * nvars + s++] = Rational(-1);
    b[i] = cons[i].rhs;
  }
  LpResult r = simplex_solve(A, b, c);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  std::vector<Rational> x(nvars);
  for (size_t j = 0; j < nvars; ++j) x[j] = r.x[2 * j] - r.x[2 * j + 1];
  return x;
}

}  // namespace tropj
