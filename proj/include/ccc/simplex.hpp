// Copyright 2026 The ccc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Two-phase primal simplex on a dense tableau, Bland's rule, exact field
// arithmetic. The scalar type must be an exact ordered field (mpq_class).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccc/common.hpp"

namespace ccc {

// minimize objective . x  subject to  constraints * x = rhs, x >= 0.
template <typename T>
struct StandardFormLp {
  std::vector<T> objective;
  std::vector<std::vector<T>> constraints;
  std::vector<T> rhs;

  int num_rows() const { return static_cast<int>(rhs.size()); }
  int num_cols() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* ToString(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

template <typename T>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<T> x;
  T objective_value{};
  // Basic column of each surviving row, in row order.
  std::vector<int> basis;
  // objective - (dual prices) * constraints, per structural column.
  std::vector<T> reduced_costs;
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  // Defaults to 10 * (rows + cols)^2.
  std::optional<std::int64_t> iteration_cap;
};

namespace internal {

template <typename T>
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols) {
    cells_.assign(rows, std::vector<T>(cols + 1));
    reduced_.assign(cols + 1, T(0));
    basis_.assign(rows, -1);
  }

  T& at(int r, int c) { return cells_[r][c]; }
  const T& at(int r, int c) const { return cells_[r][c]; }
  T& rhs(int r) { return cells_[r][cols_]; }
  T& reduced(int c) { return reduced_[c]; }
  std::vector<int>& basis() { return basis_; }
  int rows() const { return rows_; }

  void Pivot(int r, int s) {
    std::vector<T>& pivot_row = cells_[r];
    const T pivot = pivot_row[s];
    for (T& v : pivot_row) {
      if (v != 0) v /= pivot;
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == r || cells_[i][s] == 0) continue;
      Eliminate(cells_[i], pivot_row, s);
    }
    if (reduced_[s] != 0) Eliminate(reduced_, pivot_row, s);
    basis_[r] = s;
  }

  // Recomputes the reduced-cost row for `cost` against the current basis.
  void Price(const std::vector<T>& cost) {
    for (int j = 0; j <= cols_; ++j) reduced_[j] = j < cols_ ? cost[j] : T(0);
    for (int i = 0; i < rows_; ++i) {
      const T& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (cells_[i][j] != 0) reduced_[j] -= cb * cells_[i][j];
      }
    }
  }

  void DropRow(int r) {
    cells_.erase(cells_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  static void Eliminate(std::vector<T>& row, const std::vector<T>& pivot_row,
                        int s) {
    const T factor = row[s];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (pivot_row[j] != 0) row[j] -= factor * pivot_row[j];
    }
  }

  int rows_;
  int cols_;
  std::vector<std::vector<T>> cells_;
  std::vector<T> reduced_;
  std::vector<int> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column enters; among minimum-ratio
// rows the one whose basic column has the lowest index leaves.
template <typename T>
PhaseResult RunPhase(Tableau<T>& tab, int allowed_cols, std::int64_t& iterations,
                     std::int64_t cap) {
  while (true) {
    int enter = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      if (tab.reduced(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return PhaseResult::kOptimal;
    int leave = -1;
    T best_ratio;
    for (int i = 0; i < tab.rows(); ++i) {
      if (!(tab.at(i, enter) > 0)) continue;
      T ratio = tab.rhs(i) / tab.at(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis()[i] < tab.basis()[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return PhaseResult::kUnbounded;
    if (++iterations > cap) {
      throw DiagnosticError("simplex iteration cap of " + std::to_string(cap) +
                            " exceeded");
    }
    tab.Pivot(leave, enter);
  }
}

}  // namespace internal

template <typename T>
LpSolution<T> SolveLp(const StandardFormLp<T>& lp, SimplexOptions options = {}) {
  const int m = lp.num_rows();
  const int n = lp.num_cols();
  if (static_cast<int>(lp.constraints.size()) != m) {
    throw StructuralError("constraint matrix row count differs from rhs length");
  }
  for (const auto& row : lp.constraints) {
    if (static_cast<int>(row.size()) != n) {
      throw StructuralError("constraint matrix column count differs from objective length");
    }
  }
  const std::int64_t cap = options.iteration_cap.value_or(
      10 * static_cast<std::int64_t>(m + n) * (m + n));

  // Columns [0, n) are structural, [n, n + m) artificial.
  internal::Tableau<T> tab(m, n + m);
  for (int i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i] < 0;
    for (int j = 0; j < n; ++j) {
      tab.at(i, j) = flip ? T(-lp.constraints[i][j]) : lp.constraints[i][j];
    }
    tab.at(i, n + i) = T(1);
    tab.rhs(i) = flip ? T(-lp.rhs[i]) : lp.rhs[i];
    tab.basis()[i] = n + i;
  }

  LpSolution<T> sol;
  std::vector<T> phase_one_cost(n + m, T(0));
  for (int i = 0; i < m; ++i) phase_one_cost[n + i] = T(1);
  tab.Price(phase_one_cost);
  internal::RunPhase(tab, n + m, sol.iterations, cap);
  if (tab.reduced(n + m) != 0) {
    // The reduced-cost rhs slot holds minus the artificial total.
    sol.status = LpStatus::kInfeasible;
    return sol;
  }

  // Pivot zero-level artificials out of the basis; rows with no structural
  // entry left are linearly dependent and are dropped.
  for (int i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis()[i] < n) continue;
    int j = 0;
    while (j < n && tab.at(i, j) == 0) ++j;
    if (j < n) {
      tab.Pivot(i, j);
    } else {
      tab.DropRow(i);
    }
  }

  std::vector<T> phase_two_cost(n + m, T(0));
  for (int j = 0; j < n; ++j) phase_two_cost[j] = lp.objective[j];
  tab.Price(phase_two_cost);
  if (internal::RunPhase(tab, n, sol.iterations, cap) ==
      internal::PhaseResult::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, T(0));
  for (int i = 0; i < tab.rows(); ++i) sol.x[tab.basis()[i]] = tab.rhs(i);
  sol.objective_value = T(0);
  for (int j = 0; j < n; ++j) {
    if (sol.x[j] != 0) sol.objective_value += lp.objective[j] * sol.x[j];
  }
  sol.basis = tab.basis();
  sol.reduced_costs.resize(n);
  for (int j = 0; j < n; ++j) sol.reduced_costs[j] = tab.reduced(j);
  return sol;
}

}  // namespace ccc
