#include "gitstate/simplex.hpp"

#include <stdexcept>

#include "gitstate/errors.hpp"

namespace gitstate {

bool feasible_nonneg(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b) {
  const size_t m = A.size();
  if (b.size() != m) throw UsageError("matrix and right-hand side sizes differ");
  if (m == 0) return true;
  const size_t n = A.front().size();
  for (const auto& row : A)
    if (row.size() != n) throw UsageError("ragged constraint matrix");

  // Tableau rows over columns [original 0..n-1 | artificial n..n+m-1 | rhs],
  // with rhs made nonnegative so the artificial basis is feasible.
  const size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, Rational(0)));
  for (size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (size_t j = 0; j < n; ++j) T[i][j] = flip ? -A[i][j] : A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = flip ? -b[i] : b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row for minimizing the artificial sum; z[cols-1] = -objective.
  std::vector<Rational> z(cols, Rational(0));
  for (size_t j = 0; j < cols; ++j) {
    Rational s(0);
    for (size_t i = 0; i < m; ++i) s += T[i][j];
    z[j] = (j >= n && j < n + m) ? Rational(0) : -s;
  }

  for (;;) {
    // Bland: lowest-index entering column with negative reduced cost.
    // Artificial columns never re-enter; the zero-objective optimum, when it
    // exists, is reachable without them.
    size_t enter = cols;
    for (size_t j = 0; j < n; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("unbounded phase-1 objective");

    Rational piv = T[leave][enter];
    for (size_t j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (size_t j = 0; j < cols; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  return z[cols - 1] == 0;
}

}  // namespace gitstate
