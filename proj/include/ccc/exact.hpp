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

// Brute-force optimum by enumerating every set partition of V.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ccc/instance.hpp"

namespace ccc {

// Visits every set partition of {0..m-1} once, as a restricted-growth string
// a[0..m-1] with a[0] = 0 and a[i] <= 1 + max(a[0..i-1]). Stops early when
// `visit` returns false.
template <typename Visitor>
void ForEachRestrictedGrowthString(int m, Visitor&& visit) {
  std::vector<int> a(m, 0);
  if (m == 0) {
    visit(static_cast<const std::vector<int>&>(a), 0);
    return;
  }
  // cap[i] = 1 + max(a[0..i-1]): the largest value a[i] may take.
  std::vector<int> cap(m, 1);
  cap[0] = 0;
  while (true) {
    int blocks = std::max(cap[m - 1], a[m - 1] + 1);
    if (!visit(static_cast<const std::vector<int>&>(a), blocks)) return;
    int i = m - 1;
    while (i > 0 && a[i] == cap[i]) --i;
    if (i == 0) return;
    ++a[i];
    for (int j = i + 1; j < m; ++j) {
      a[j] = 0;
      cap[j] = std::max(cap[j - 1], a[j - 1] + 1);
    }
  }
}

// Converts a growth string over `atoms` into the corresponding vertex sets.
inline std::vector<VertexSet> BlocksFromGrowth(const std::vector<int>& growth,
                                               int blocks,
                                               const std::vector<VertexSet>& atoms) {
  std::vector<VertexSet> parts(blocks, 0);
  for (std::size_t i = 0; i < growth.size(); ++i) parts[growth[i]] |= atoms[i];
  return parts;
}

struct ColorChoice {
  Color color;
  std::int64_t inside_cost;
};

// Color minimizing the inside cost of S; ties go to the smallest color id.
inline ColorChoice BestColor(const ChromaticInstance& inst, VertexSet s) {
  ColorChoice best{0, MinusEllInsideCount(inst, s, 0)};
  for (Color c = 1; c < inst.num_colors(); ++c) {
    std::int64_t cost = MinusEllInsideCount(inst, s, c);
    if (cost < best.inside_cost) best = {c, cost};
  }
  return best;
}

// Every color attaining BestColor's inside cost, ascending.
inline std::vector<Color> OptimalColors(const ChromaticInstance& inst,
                                        VertexSet s) {
  std::int64_t best = BestColor(inst, s).inside_cost;
  std::vector<Color> out;
  for (Color c = 0; c < inst.num_colors(); ++c) {
    if (MinusEllInsideCount(inst, s, c) == best) out.push_back(c);
  }
  return out;
}

// Each part colored with BestColor.
inline Clustering ColorOptimally(const ChromaticInstance& inst,
                                 std::vector<VertexSet> parts) {
  Clustering out;
  out.parts = std::move(parts);
  for (VertexSet p : out.parts) out.colors.push_back(BestColor(inst, p).color);
  return out;
}

// Cost of a partition when every part takes its best color.
inline std::int64_t PartitionCost(const ChromaticInstance& inst,
                                  const std::vector<VertexSet>& parts) {
  std::int64_t inside = 0;
  std::int64_t crossing = 0;
  for (VertexSet p : parts) {
    inside += BestColor(inst, p).inside_cost;
    crossing += DeltaPlusCount(inst, p);
  }
  return inside + crossing / 2;
}

struct OptimumReport {
  std::int64_t opt_cost = 0;
  Clustering one_optimal;
  std::vector<std::vector<VertexSet>> all_optimal_partitions;
  std::int64_t partitions_enumerated = 0;
};

inline constexpr int kDefaultExactLimit = 10;

inline std::vector<VertexSet> SingletonAtoms(int n) {
  std::vector<VertexSet> atoms;
  for (Vertex v = 0; v < n; ++v) atoms.push_back(Singleton(v));
  return atoms;
}

inline OptimumReport SolveExact(const ChromaticInstance& inst,
                                int limit = kDefaultExactLimit) {
  if (inst.n() > limit) {
    throw CapacityError("exact search is limited to n <= " +
                        std::to_string(limit) + " (got " +
                        std::to_string(inst.n()) + ")");
  }
  OptimumReport report;
  report.opt_cost = std::numeric_limits<std::int64_t>::max();
  const std::vector<VertexSet> atoms = SingletonAtoms(inst.n());
  ForEachRestrictedGrowthString(inst.n(), [&](const std::vector<int>& g, int k) {
    ++report.partitions_enumerated;
    std::vector<VertexSet> parts = BlocksFromGrowth(g, k, atoms);
    std::int64_t cost = PartitionCost(inst, parts);
    if (cost < report.opt_cost) {
      report.opt_cost = cost;
      report.all_optimal_partitions.clear();
    }
    if (cost == report.opt_cost) {
      report.all_optimal_partitions.push_back(std::move(parts));
    }
    return true;
  });
  report.one_optimal = ColorOptimally(inst, report.all_optimal_partitions.front());
  return report;
}

struct RespectingOptimum {
  std::int64_t cost = 0;
  Clustering solution;
  std::int64_t candidates_enumerated = 0;
};

// Cheapest clustering respecting `pre`, by enumerating partitions of the
// preclusters. Non-singleton preclusters force their cluster's color.
inline RespectingOptimum SolveRespectingExact(const ChromaticInstance& inst,
                                              const PreclusteredInstance& pre,
                                              int limit = 12) {
  const int m = static_cast<int>(pre.preclusters.size());
  if (m > limit) {
    throw CapacityError("respecting search is limited to " +
                        std::to_string(limit) + " preclusters");
  }
  // Preclusters that may share a cluster: every cross pair admissible.
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      bool ok = true;
      for (Vertex u : Members(pre.preclusters[a])) {
        if (!IsSubset(pre.preclusters[b], pre.admissible[u])) ok = false;
      }
      if (pre.precolor[a] && pre.precolor[b] &&
          *pre.precolor[a] != *pre.precolor[b]) {
        ok = false;
      }
      compatible[a][b] = compatible[b][a] = ok;
    }
  }
  RespectingOptimum best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  ForEachRestrictedGrowthString(m, [&](const std::vector<int>& g, int k) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (g[a] == g[b] && !compatible[a][b]) return true;
      }
    }
    ++best.candidates_enumerated;
    Clustering sol;
    sol.parts = BlocksFromGrowth(g, k, pre.preclusters);
    sol.colors.assign(k, -1);
    for (int a = 0; a < m; ++a) {
      if (pre.precolor[a]) sol.colors[g[a]] = *pre.precolor[a];
    }
    for (int b = 0; b < k; ++b) {
      if (sol.colors[b] < 0) sol.colors[b] = BestColor(inst, sol.parts[b]).color;
    }
    std::int64_t cost = CountDisagreements(inst, sol);
    if (cost < best.cost) {
      best.cost = cost;
      best.solution = std::move(sol);
    }
    return true;
  });
  return best;
}

}  // namespace ccc
