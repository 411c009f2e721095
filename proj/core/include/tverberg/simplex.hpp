#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tverberg {

/// Dense row-major constraint matrix.
using Matrix = std::vector<std::vector<double>>;

inline constexpr std::size_t kDefaultPivotCap = 50000;

/// Phase-one simplex: returns some x >= 0 with A x = b, or nullopt when the
/// system is infeasible (artificial objective above tol). Pivots follow
/// Bland's rule; exceeding pivot_cap throws LpCycling.
std::optional<std::vector<double>> feasible_point(const Matrix& a, const std::vector<double>& b, double tol = 1e-9,
                                                  std::size_t pivot_cap = kDefaultPivotCap);

}  // namespace tverberg
