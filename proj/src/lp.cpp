#include "crsn/lp.hpp"

#include <cmath>

namespace crsn {

LpSolution solve_lp_min(const std::vector<double>& c,
                        const std::vector<std::vector<double>>& a,
                        const std::vector<double>& b) {
  const size_t n = c.size();
  const size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw NumericalFailure("solve_lp_min: ragged constraint matrix");
  for (double rhs : b)
    if (rhs < 0) throw NumericalFailure("solve_lp_min: negative right-hand side");

  // Maximize -c.x in a standard tableau with slack basis. Row 0 is the
  // objective; column n+m is the right-hand side.
  const size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (size_t j = 0; j < n; ++j) t[0][j] = c[j];
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i + 1][j] = a[i][j];
    t[i + 1][n + i] = 1.0;
    t[i + 1][cols - 1] = b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  const double eps = 1e-11;
  const size_t max_pivots = 200 * (n + m + 1);
  for (size_t pivot_count = 0;; ++pivot_count) {
    if (pivot_count > max_pivots) throw NumericalFailure("solve_lp_min: pivoting stalled");
    // Bland's rule: smallest index with a strictly negative reduced cost.
    size_t enter = cols;
    for (size_t j = 0; j + 1 < cols; ++j) {
      if (t[0][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;  // optimal
    size_t leave = 0;
    double best_ratio = 0;
    bool found = false;
    for (size_t i = 1; i <= m; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (!found || ratio < best_ratio - eps ||
            (std::fabs(ratio - best_ratio) <= eps && basis[leave - 1] > basis[i - 1])) {
          best_ratio = ratio;
          leave = i;
          found = true;
        }
      }
    }
    if (!found) throw NumericalFailure("solve_lp_min: unbounded instance");
    const double pivot = t[leave][enter];
    for (size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave - 1] = enter;
  }

  LpSolution solution;
  solution.x.assign(n, 0.0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) solution.x[basis[i]] = t[i + 1][cols - 1];
  double obj = 0;
  for (size_t j = 0; j < n; ++j) obj += c[j] * solution.x[j];
  solution.objective = obj;
  return solution;
}

}  // namespace crsn
