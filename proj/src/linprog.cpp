#include "symamp/linprog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symamp::lp {

namespace {

constexpr double kReducedCostTol = 1e-11;
constexpr double kPivotTol = 1e-12;

}  // namespace

Result maximize(const std::vector<std::vector<double>>& a,
                const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(a.size());
  const int nv = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("rhs length must match constraint count");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != nv) {
      throw std::invalid_argument("constraint row length must match variable count");
    }
  }
  for (double rhs : b) {
    if (rhs < -kPivotTol) {
      throw SolverFailure("negative right-hand side; origin is not feasible");
    }
  }

  // Tableau rows 0..m-1: [A | I | b]; row m: reduced costs, starting at -c.
  const int cols = nv + m + 1;
  std::vector<std::vector<double>> t(static_cast<size_t>(m) + 1,
                                     std::vector<double>(static_cast<size_t>(cols), 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) {
      t[i][static_cast<size_t>(j)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    t[i][static_cast<size_t>(nv + i)] = 1.0;
    t[i][static_cast<size_t>(cols - 1)] = std::max(b[static_cast<size_t>(i)], 0.0);
  }
  for (int j = 0; j < nv; ++j) {
    t[static_cast<size_t>(m)][static_cast<size_t>(j)] = -c[static_cast<size_t>(j)];
  }

  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    basis[static_cast<size_t>(i)] = nv + i;
  }

  Result result;
  const int max_iterations = 1000 + 50 * (m + nv);
  for (int iteration = 0;; ++iteration) {
    if (iteration > max_iterations) {
      throw SolverFailure("simplex iteration limit exceeded");
    }
    // Bland: entering variable is the smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < cols - 1; ++j) {
      if (t[static_cast<size_t>(m)][static_cast<size_t>(j)] < -kReducedCostTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      result.iterations = iteration;
      break;
    }
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      const double coef = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (coef <= kPivotTol) {
        continue;
      }
      const double ratio = t[static_cast<size_t>(i)][static_cast<size_t>(cols - 1)] / coef;
      if (leave < 0 || ratio < best_ratio - kPivotTol ||
          (std::abs(ratio - best_ratio) <= kPivotTol &&
           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw SolverFailure("objective is unbounded over the feasible region");
    }
    // Pivot on (leave, enter).
    const double pivot = t[static_cast<size_t>(leave)][static_cast<size_t>(enter)];
    for (int j = 0; j < cols; ++j) {
      t[static_cast<size_t>(leave)][static_cast<size_t>(j)] /= pivot;
    }
    for (int i = 0; i <= m; ++i) {
      if (i == leave) {
        continue;
      }
      const double factor = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (factor == 0.0) {
        continue;
      }
      for (int j = 0; j < cols; ++j) {
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            factor * t[static_cast<size_t>(leave)][static_cast<size_t>(j)];
      }
      t[static_cast<size_t>(i)][static_cast<size_t>(enter)] = 0.0;
    }
    basis[static_cast<size_t>(leave)] = enter;
  }

  result.x.assign(static_cast<size_t>(nv), 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] < nv) {
      result.x[static_cast<size_t>(basis[static_cast<size_t>(i)])] =
          std::max(t[static_cast<size_t>(i)][static_cast<size_t>(cols - 1)], 0.0);
    }
  }
  result.objective = t[static_cast<size_t>(m)][static_cast<size_t>(cols - 1)];
  return result;
}

}  // namespace symamp::lp
