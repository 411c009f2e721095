#include "tverberg/simplex.hpp"

#include <cmath>
#include <string>

#include "tverberg/error.hpp"

namespace tverberg {

std::optional<std::vector<double>> feasible_point(const Matrix& a, const std::vector<double>& b, double tol,
                                                  std::size_t pivot_cap) {
  const std::size_t rows = a.size();
  if (b.size() != rows) fail(ErrorKind::Usage, "constraint matrix and right-hand side disagree in size");
  const std::size_t vars = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != vars) fail(ErrorKind::Usage, "ragged constraint matrix");
  }
  if (rows == 0) return std::vector<double>(vars, 0.0);

  // Columns: original variables, one artificial per row, right-hand side.
  const std::size_t cols = vars + rows + 1;
  const std::size_t rhs = cols - 1;
  Matrix t(rows + 1, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = sign * a[i][j];
    t[i][vars + i] = 1.0;
    t[i][rhs] = sign * b[i];
    basis[i] = vars + i;
  }
  // Reduced costs of min sum(artificials), stored in the last row.
  std::vector<double>& z = t[rows];
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) z[j] -= t[i][j];
    z[rhs] -= t[i][rhs];
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / t[pr][pc];
    for (double& v : t[pr]) v *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == pr) continue;
      const double factor = t[i][pc];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[pr][j];
    }
    basis[pr] = pc;
  };

  constexpr double kPivotEps = 1e-12;
  for (std::size_t count = 0;; ++count) {
    if (count >= pivot_cap) fail(ErrorKind::LpCycling, "simplex exceeded " + std::to_string(pivot_cap) + " pivots");
    // Bland: lowest-index column with negative reduced cost.
    std::size_t pc = cols;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (z[j] < -kPivotEps) {
        pc = j;
        break;
      }
    }
    if (pc == cols) break;
    std::size_t pr = rows;
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][pc] <= kPivotEps) continue;
      const double ratio = t[i][rhs] / t[i][pc];
      if (pr == rows || ratio < best - kPivotEps || (std::abs(ratio - best) <= kPivotEps && basis[i] < basis[pr])) {
        pr = i;
        best = ratio;
      }
    }
    if (pr == rows) break;  // unbounded direction; cannot happen for phase one
    pivot(pr, pc);
  }

  if (-z[rhs] > tol) return std::nullopt;
  std::vector<double> x(vars, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) x[basis[i]] = std::max(0.0, t[i][rhs]);
  }
  return x;
}

}  // namespace tverberg
