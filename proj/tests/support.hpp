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

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the library routine it is meant to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ccc/ccc.hpp"

namespace ccc::testing {

// V = {0,1,2}, L = {r,b}: (0,1) = +r, (1,2) = +b, (0,2) = -.
inline ChromaticInstance T3() {
  InstanceBuilder b(3, {"r", "b"});
  b.Plus(0, 1, 0);
  b.Plus(1, 2, 1);
  b.Minus(0, 2);
  return b.Build();
}

inline ChromaticInstance Clique(int n, int colors, Color c) {
  InstanceBuilder b(n, DefaultColorNames(colors));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.Plus(u, v, c);
  }
  return b.Build();
}

inline ChromaticInstance AllMinus(int n, int colors = 1) {
  InstanceBuilder b(n, DefaultColorNames(colors));
  b.FillRemaining(kMinus);
  return b.Build();
}

inline ChromaticInstance RandomInstance(Rng& rng, int n, int colors, double plus = 0.5) {
  return GenerateUniform(n, colors, plus, rng());
}

// Pair-by-pair reading of the disagreement definition.
inline std::int64_t NaiveDisagreements(const ChromaticInstance& inst, const Clustering& sol) {
  std::int64_t bad = 0;
  for (Vertex u = 0; u < inst.n(); ++u) {
    for (Vertex v = u + 1; v < inst.n(); ++v) {
      std::optional<std::size_t> cu, cv;
      for (std::size_t i = 0; i < sol.parts.size(); ++i) {
        if (Contains(sol.parts[i], u)) cu = i;
        if (Contains(sol.parts[i], v)) cv = i;
      }
      const bool together = *cu == *cv;
      const Label l = inst.label(u, v);
      if (l == kMinus && together) ++bad;
      if (l != kMinus && !together) ++bad;
      if (l != kMinus && together && sol.colors[*cu] != l) ++bad;
    }
  }
  return bad;
}

// Uniformly random set partition (via random labels) with random colors.
inline Clustering RandomClustering(Rng& rng, int n, int colors) {
  std::uniform_int_distribution<int> block(0, n - 1);
  std::uniform_int_distribution<int> color(0, colors - 1);
  std::vector<VertexSet> parts(n, 0);
  for (Vertex v = 0; v < n; ++v) parts[block(rng)] |= Singleton(v);
  Clustering out;
  for (VertexSet p : parts) {
    if (p == 0) continue;
    out.parts.push_back(p);
    out.colors.push_back(color(rng));
  }
  return out;
}

// Every clustering of V: all set partitions times all colorings.
template <typename Visit>
void ForEachClustering(int n, int colors, Visit&& visit) {
  std::vector<int> a(n, 0);
  // Plain recursion over restricted-growth labels.
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      std::vector<VertexSet> parts(blocks, 0);
      for (int v = 0; v < n; ++v) parts[a[v]] |= Singleton(v);
      std::vector<Color> col(blocks, 0);
      while (true) {
        visit(Clustering{parts, col});
        int j = 0;
        while (j < blocks && ++col[j] == colors) col[j++] = 0;
        if (j == blocks) break;
      }
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return;
  rec(rec, 0, 0);
}

// Sum over S containing u but not v of z^c_S.
inline Rational CrossingMass(const FractionalClusterSolution& z, Color c, Vertex u, Vertex v) {
  Rational total = 0;
  for (const auto& [col, value] : z.entries) {
    if (col.color == c && Contains(col.set, u) && !Contains(col.set, v)) total += value;
  }
  return total;
}

// Random convex combination of up to `k` random clusterings, merged by column.
inline FractionalClusterSolution RandomConvexZ(Rng& rng, const ChromaticInstance& inst, int k) {
  std::uniform_int_distribution<int> count(1, k);
  std::uniform_int_distribution<int> weight(1, 9);
  const int m = count(rng);
  std::vector<int> w(m);
  int total = 0;
  for (int& x : w) total += (x = weight(rng));
  FractionalClusterSolution z;
  for (int i = 0; i < m; ++i) {
    const Clustering c = RandomClustering(rng, inst.n(), inst.num_colors());
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
      z.entries[{c.colors[j], c.parts[j]}] += Frac(w[i], total);
    }
  }
  return z;
}

// Brute-force LP oracle: min c.x, Ax = b, x >= 0, by enumerating every basic
// feasible solution. Unboundedness is decided by the normalized recession
// cone {d >= 0, Ad = 0, 1.d = 1}, whose minimum of c.d is attained at one of
// its own basic feasible solutions.
struct BruteLpResult {
  LpStatus status;
  Rational value;
};

namespace brute {

// Solves M y = r for y, where M has the given columns; nullopt if the columns
// are dependent or the system is inconsistent.
inline std::optional<std::vector<Rational>> SolveColumns(
    const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& r,
    const std::vector<int>& cols) {
  const std::size_t rows = m.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[i][cols[j]];
    aug[i][k] = r[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t p = row;
    while (p < rows && aug[p][j] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || aug[i][j] == 0) continue;
      const Rational f = aug[i][j] / aug[row][j];
      for (std::size_t h = j; h <= k; ++h) aug[i][h] -= f * aug[row][h];
    }
    pivot_row[j] = row++;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (aug[i][k] != 0) return std::nullopt;
  }
  std::vector<Rational> y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = aug[pivot_row[j]][k] / aug[pivot_row[j]][j];
  return y;
}

// Minimum of c.x over basic feasible solutions of M x = r, x >= 0.
inline std::optional<Rational> MinOverBfs(const std::vector<std::vector<Rational>>& m,
                                          const std::vector<Rational>& r,
                                          const std::vector<Rational>& c) {
  const int vars = static_cast<int>(c.size());
  const int rows = static_cast<int>(m.size());
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1U << vars); ++mask) {
    if (std::popcount(mask) > rows) continue;
    std::vector<int> cols;
    for (int j = 0; j < vars; ++j) {
      if ((mask >> j) & 1U) cols.push_back(j);
    }
    auto y = SolveColumns(m, r, cols);
    if (!y) continue;
    bool nonneg = true;
    Rational value = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if ((*y)[j] < 0) nonneg = false;
      value += c[cols[j]] * (*y)[j];
    }
    if (!nonneg) continue;
    if (!best || value < *best) best = value;
  }
  return best;
}

}  // namespace brute

inline BruteLpResult BruteForceLp(const StandardFormLp<Rational>& lp) {
  auto best = brute::MinOverBfs(lp.constraints, lp.rhs, lp.objective);
  if (!best) return {LpStatus::kInfeasible, 0};
  std::vector<std::vector<Rational>> cone = lp.constraints;
  cone.emplace_back(lp.objective.size(), Rational(1));
  std::vector<Rational> cone_rhs(lp.rhs.size(), Rational(0));
  cone_rhs.push_back(1);
  auto ray = brute::MinOverBfs(cone, cone_rhs, lp.objective);
  if (ray && *ray < 0) return {LpStatus::kUnbounded, 0};
  return {LpStatus::kOptimal, *best};
}

inline StandardFormLp<Rational> RandomSmallLp(Rng& rng, int max_vars = 6, int max_rows = 4) {
  std::uniform_int_distribution<int> vars(1, max_vars);
  std::uniform_int_distribution<int> rows(1, max_rows);
  std::uniform_int_distribution<int> entry(-5, 5);
  StandardFormLp<Rational> lp;
  const int nv = vars(rng);
  const int nr = rows(rng);
  for (int j = 0; j < nv; ++j) lp.objective.emplace_back(entry(rng));
  for (int i = 0; i < nr; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < nv; ++j) row.emplace_back(entry(rng));
    lp.constraints.push_back(std::move(row));
    lp.rhs.emplace_back(entry(rng));
  }
  return lp;
}

// Binomial standard error of a frequency estimate around probability p.
inline double BinomialStderr(double p, std::int64_t trials) {
  return std::sqrt(std::max(p * (1 - p), 0.0) / static_cast<double>(trials));
}

inline std::size_t CountCsvCells(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace ccc::testing
