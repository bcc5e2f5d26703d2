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

// The chromatic cluster LP: one variable z[color][S] per color and nonempty
// vertex subset S, with per-vertex coverage constraints, plus the pair and
// vertex marginals derived from a feasible z.

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/instance.hpp"
#include "ccc/simplex.hpp"

namespace ccc {

inline constexpr std::int64_t kDefaultColumnCap = std::int64_t{1} << 20;

struct ClusterColumn {
  Color color;
  VertexSet set;

  friend auto operator<=>(const ClusterColumn&, const ClusterColumn&) = default;
};

// Per-unit cost of declaring S a cluster of color c: half the + edges leaving
// S plus the pairs inside S that are not c-colored + edges.
inline Rational ColumnCost(const ChromaticInstance& inst, VertexSet s, Color c) {
  return Frac(DeltaPlusCount(inst, s), 2) + MinusEllInsideCount(inst, s, c);
}

struct ClusterLp {
  StandardFormLp<Rational> lp;
  std::vector<ClusterColumn> columns;
};

inline std::int64_t NumClusterColumns(const ChromaticInstance& inst) {
  if (inst.n() >= 62) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(inst.num_colors()) *
         ((std::int64_t{1} << inst.n()) - 1);
}

// Columns are color-major: every nonempty S for color 0, then color 1, ...
inline ClusterLp BuildClusterLp(const ChromaticInstance& inst,
                                std::int64_t column_cap = kDefaultColumnCap) {
  const std::int64_t num_columns = NumClusterColumns(inst);
  if (num_columns > column_cap) {
    throw CapacityError("cluster LP would need more than " +
                        std::to_string(column_cap) + " columns");
  }
  const int n = inst.n();
  const VertexSet full = inst.all();
  ClusterLp out;
  out.columns.reserve(num_columns);
  out.lp.objective.reserve(num_columns);
  out.lp.constraints.assign(n, std::vector<Rational>(num_columns, Rational(0)));
  out.lp.rhs.assign(n, Rational(1));
  for (Color c = 0; c < inst.num_colors(); ++c) {
    for (VertexSet s = 1;; ++s) {
      const std::size_t j = out.columns.size();
      out.columns.push_back({c, s});
      out.lp.objective.push_back(ColumnCost(inst, s, c));
      for (Vertex v : Members(s)) out.lp.constraints[v][j] = 1;
      if (s == full) break;
    }
  }
  return out;
}

// Sparse z: only strictly positive entries are stored.
struct FractionalClusterSolution {
  std::map<ClusterColumn, Rational> entries;

  std::size_t support_size() const { return entries.size(); }

  friend bool operator==(const FractionalClusterSolution&,
                         const FractionalClusterSolution&) = default;
};

// Structural validity plus exact coverage: sum over S containing v of z = 1.
inline bool IsFeasible(const ChromaticInstance& inst,
                       const FractionalClusterSolution& z) {
  std::vector<Rational> cover(inst.n(), Rational(0));
  for (const auto& [col, value] : z.entries) {
    if (!(value > 0) || col.set == 0 || !IsSubset(col.set, inst.all()) ||
        col.color < 0 || col.color >= inst.num_colors()) {
      return false;
    }
    for (Vertex v : Members(col.set)) cover[v] += value;
  }
  for (const Rational& c : cover) {
    if (c != 1) return false;
  }
  return true;
}

// c . z evaluated column by column.
inline Rational LpObjective(const ChromaticInstance& inst,
                            const FractionalClusterSolution& z) {
  Rational total = 0;
  for (const auto& [col, value] : z.entries) {
    total += ColumnCost(inst, col.set, col.color) * value;
  }
  return total;
}

// The 0/1 vector of a clustering.
inline FractionalClusterSolution Embed(const ChromaticInstance& inst,
                                       const Clustering& sol) {
  RequireValid(inst, sol);
  FractionalClusterSolution z;
  for (std::size_t i = 0; i < sol.parts.size(); ++i) {
    z.entries[{sol.colors[i], sol.parts[i]}] = 1;
  }
  return z;
}

struct ClusterLpOptimum {
  FractionalClusterSolution z;
  Rational value;
  std::int64_t simplex_iterations = 0;
  std::int64_t num_columns = 0;
};

inline ClusterLpOptimum SolveClusterLp(const ChromaticInstance& inst,
                                       std::int64_t column_cap = kDefaultColumnCap,
                                       SimplexOptions options = {}) {
  ClusterLp model = BuildClusterLp(inst, column_cap);
  LpSolution<Rational> sol = SolveLp(model.lp, options);
  if (sol.status != LpStatus::kOptimal) {
    // Singletons are always feasible and costs are nonnegative.
    throw DiagnosticError(std::string("cluster LP solve returned ") +
                          ToString(sol.status));
  }
  ClusterLpOptimum out;
  out.value = sol.objective_value;
  out.simplex_iterations = sol.iterations;
  out.num_columns = static_cast<std::int64_t>(model.columns.size());
  for (std::size_t j = 0; j < sol.x.size(); ++j) {
    if (sol.x[j] > 0) out.z.entries[model.columns[j]] = sol.x[j];
  }
  if (out.z.support_size() > static_cast<std::size_t>(inst.n())) {
    throw DiagnosticError("basic solution has support larger than n");
  }
  if (!IsFeasible(inst, out.z)) {
    throw DiagnosticError("cluster LP solution violates coverage");
  }
  return out;
}

// x_colored[c][pair] = 1 - sum_{S contains pair} z[c][S]
// t[c][v]            = 1 - sum_{S contains v} z[c][S]
// x_plain[pair]      = 1 - sum_{c, S contains pair} z[c][S]
// Pairs are indexed by PairIndex.
struct PairMarginals {
  std::vector<std::vector<Rational>> x_colored;
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> x_plain;
};

inline PairMarginals Marginals(const ChromaticInstance& inst,
                               const FractionalClusterSolution& z) {
  if (!IsFeasible(inst, z)) {
    throw ContractError("marginals need a feasible cluster LP solution");
  }
  const int n = inst.n();
  const int colors = inst.num_colors();
  const std::size_t pairs = PairCount(n);
  PairMarginals m;
  m.x_colored.assign(colors, std::vector<Rational>(pairs, Rational(1)));
  m.t.assign(colors, std::vector<Rational>(n, Rational(1)));
  m.x_plain.assign(pairs, Rational(1));
  for (const auto& [col, value] : z.entries) {
    std::vector<Vertex> vs = Members(col.set);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      m.t[col.color][vs[a]] -= value;
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const std::size_t p = PairIndex(n, vs[a], vs[b]);
        m.x_colored[col.color][p] -= value;
        m.x_plain[p] -= value;
      }
    }
  }
  return m;
}

// The objective rewritten over marginals: sum over + edges of the
// edge-colored x, plus sum over - edges and colors of (1 - x_colored).
inline Rational ObjX(const ChromaticInstance& inst, const PairMarginals& m) {
  const int n = inst.n();
  Rational total = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t p = PairIndex(n, u, v);
      const Label l = inst.label(u, v);
      if (l != kMinus) {
        total += m.x_colored[l][p];
      } else {
        for (Color c = 0; c < inst.num_colors(); ++c) {
          total += 1 - m.x_colored[c][p];
        }
      }
    }
  }
  return total;
}

}  // namespace ccc
