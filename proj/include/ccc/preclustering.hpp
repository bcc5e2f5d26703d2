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

// Preclustering: the marking procedure that turns an initial clustering into
// preclusters K with colors, and the degree/similarity machinery that decides
// which cross-precluster pairs are admissible.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/instance.hpp"

namespace ccc {

struct PreclusterParams {
  Rational alpha{1, 50};
  Rational beta{1, 50};
  Rational epsilon{1, 10};

  Rational eta() const { return (alpha + beta) / (1 - beta); }

  // alpha, beta in (0, 1) with eta in (0, 1/13).
  void ValidateMarking() const {
    if (!(alpha > 0 && alpha < 1)) throw ContractError("alpha must lie in (0, 1)");
    if (!(beta > 0 && beta < 1)) throw ContractError("beta must lie in (0, 1)");
    const Rational e = eta();
    if (!(e > 0 && e < Rational(1, 13))) {
      throw ContractError("(alpha + beta) / (1 - beta) must lie in (0, 1/13)");
    }
  }

  void ValidateEpsilon() const {
    if (!(epsilon > 0 && epsilon < 1)) {
      throw ContractError("epsilon must lie in (0, 1)");
    }
  }
};

struct Preclustering {
  // Sorted by smallest member vertex.
  std::vector<VertexSet> preclusters;
  // Engaged exactly for preclusters of size >= 2.
  std::vector<std::optional<Color>> precolor;
  VertexSet marked = 0;
};

// |E^{-c}(u, C)|: pairs between u and C \ {u} that are not c-colored + edges.
inline std::int64_t OffColorInside(const ChromaticInstance& inst, Vertex u,
                                   VertexSet c_set, Color c) {
  const VertexSet others = c_set & ~Singleton(u);
  return Size(others) - Size(inst.colored_neighbors(c, u) & others);
}

// |E^+(u, S)|.
inline std::int64_t PlusInto(const ChromaticInstance& inst, Vertex u,
                             VertexSet s) {
  return Size(inst.plus_neighbors(u) & s & ~Singleton(u));
}

// Marks u in cluster C (color c) when |E^{-c}(u,C)| >= alpha(|C|-1) or
// |E^+(u,V\C)| >= alpha(|C|-1); then marks all of C when at least beta(|C|-1)
// of its vertices are marked. Marked vertices become singletons; the rest of
// each cluster is kept as one precluster inheriting the cluster color.
// `order` is the vertex visiting order of the first pass (default ascending).
inline Preclustering BuildPreclusters(const ChromaticInstance& inst,
                                      const Clustering& init,
                                      const PreclusterParams& params,
                                      std::span<const Vertex> order = {}) {
  RequireValid(inst, init);
  params.ValidateMarking();
  const int n = inst.n();
  std::vector<int> cluster_of(n);
  for (std::size_t i = 0; i < init.parts.size(); ++i) {
    for (Vertex v : Members(init.parts[i])) cluster_of[v] = static_cast<int>(i);
  }
  std::vector<Vertex> visit(order.begin(), order.end());
  if (visit.empty()) {
    visit.resize(n);
    std::iota(visit.begin(), visit.end(), 0);
  } else if (static_cast<int>(visit.size()) != n ||
             MakeSet(visit) != inst.all()) {
    throw ContractError("vertex order must be a permutation of V");
  }

  Preclustering out;
  for (Vertex u : visit) {
    const int ci = cluster_of[u];
    const VertexSet c_set = init.parts[ci];
    const Rational threshold = params.alpha * (Size(c_set) - 1);
    if (OffColorInside(inst, u, c_set, init.colors[ci]) >= threshold ||
        PlusInto(inst, u, inst.all() & ~c_set) >= threshold) {
      out.marked |= Singleton(u);
    }
  }
  VertexSet first_pass = out.marked;
  for (VertexSet c_set : init.parts) {
    if (Size(c_set & first_pass) >= params.beta * (Size(c_set) - 1)) {
      out.marked |= c_set;
    }
  }

  std::vector<std::pair<VertexSet, std::optional<Color>>> parts;
  for (std::size_t i = 0; i < init.parts.size(); ++i) {
    const VertexSet kept = init.parts[i] & ~out.marked;
    if (kept == 0) continue;
    parts.emplace_back(kept, Size(kept) >= 2 ? std::optional<Color>(init.colors[i])
                                             : std::nullopt);
  }
  for (Vertex v : Members(out.marked)) parts.emplace_back(Singleton(v), std::nullopt);
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return MinVertex(a.first) < MinVertex(b.first);
  });
  for (auto& [k, color] : parts) {
    out.preclusters.push_back(k);
    out.precolor.push_back(color);
  }
  return out;
}

// The preclustering read as a solution; singletons take the first color,
// which does not change the cost.
inline Clustering AsClustering(const Preclustering& pre) {
  Clustering out;
  out.parts = pre.preclusters;
  for (const auto& c : pre.precolor) out.colors.push_back(c.value_or(0));
  return out;
}

// d(K) = w+(K, V \ K) / |K| + |K| / 2.
inline Rational DegreeD(const ChromaticInstance& inst, VertexSet k) {
  if (k == 0) throw ContractError("d(K) needs a nonempty precluster");
  return Frac(WPlus(inst, k, inst.all() & ~k), Size(k)) + Frac(Size(k), 2);
}

// Indices j with eps * d[j] < d[k] < d[j] / eps. Always contains k.
inline std::vector<std::size_t> N1(std::span<const Rational> d, std::size_t k,
                                   const Rational& epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw ContractError("epsilon must lie in (0, 1)");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (epsilon * d[j] < d[k] && d[k] * epsilon < d[j]) out.push_back(j);
  }
  return out;
}

// W(K, K', scope): sum over K'' in scope \ {K, K'} of
// w+(K,K'') w+(K',K'') / (|K| |K'| |K''|), plus w+(K,K')/|K| + w+(K',K)/|K'|.
inline Rational WSimilarity(const ChromaticInstance& inst, VertexSet k,
                            VertexSet k2, std::span<const VertexSet> scope) {
  if (k == k2) throw ContractError("similarity needs two distinct preclusters");
  if (k == 0 || k2 == 0) throw ContractError("similarity needs nonempty preclusters");
  const std::int64_t size_k = Size(k);
  const std::int64_t size_k2 = Size(k2);
  Rational total = 0;
  for (VertexSet other : scope) {
    if (other == k || other == k2) continue;
    const std::int64_t a = WPlus(inst, k, other);
    const std::int64_t b = WPlus(inst, k2, other);
    if (a == 0 || b == 0) continue;
    total += Frac(a * b, size_k * size_k2 * Size(other));
  }
  const std::int64_t between = WPlus(inst, k, k2);
  total += Frac(between, size_k) + Frac(between, size_k2);
  return total;
}

struct SimilarityEntry {
  std::size_t first;
  std::size_t second;
  Rational w;
  // eps * (d(K) + d(K')); the pair is related when w exceeds it.
  Rational threshold;
  bool related;
};

struct AdmissibilityReport {
  std::vector<Rational> d;
  std::vector<std::vector<std::size_t>> n1;
  std::vector<std::vector<std::size_t>> n2;
  // One entry per pair first < second with second in N2(first).
  std::vector<SimilarityEntry> similarity;
  // Related precluster pairs (first < second).
  std::vector<std::pair<std::size_t, std::size_t>> related;
  // admissible[u]: all v with {u, v} admissible.
  std::vector<VertexSet> admissible;
  // (2/eps^2 + 2/eps) w+(K, V\K) - |K| * sum over related K' of |K'|.
  std::vector<Rational> bound_slack;

  std::size_t NumAdmissiblePairs() const {
    std::size_t total = 0;
    for (VertexSet s : admissible) total += Size(s);
    return total / 2;
  }
};

inline AdmissibilityReport BuildAdmissible(const ChromaticInstance& inst,
                                           std::span<const VertexSet> preclusters,
                                           const PreclusterParams& params) {
  params.ValidateEpsilon();
  if (!IsPartition(inst.n(), {preclusters.begin(), preclusters.end()})) {
    throw ContractError("preclusters must partition V");
  }
  const Rational& eps = params.epsilon;
  const std::size_t m = preclusters.size();
  AdmissibilityReport report;
  for (VertexSet k : preclusters) report.d.push_back(DegreeD(inst, k));
  for (std::size_t i = 0; i < m; ++i) report.n1.push_back(N1(report.d, i, eps));

  auto in_n1 = [&](std::size_t owner, std::size_t j) {
    const auto& list = report.n1[owner];
    return std::binary_search(list.begin(), list.end(), j);
  };
  report.n2.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      if (in_n1(i, i) && in_n1(j, i) && in_n1(i, j) && in_n1(j, j)) {
        report.n2[i].push_back(j);
      }
    }
  }

  std::vector<std::vector<std::size_t>> related_to(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : report.n2[i]) {
      if (j <= i) continue;
      std::vector<VertexSet> scope;
      for (std::size_t h : report.n1[i]) {
        if (in_n1(j, h)) scope.push_back(preclusters[h]);
      }
      SimilarityEntry entry{i, j, WSimilarity(inst, preclusters[i], preclusters[j], scope),
                            eps * (report.d[i] + report.d[j]), false};
      entry.related = entry.w > entry.threshold;
      if (entry.related) {
        report.related.emplace_back(i, j);
        related_to[i].push_back(j);
        related_to[j].push_back(i);
      }
      report.similarity.push_back(std::move(entry));
    }
  }

  report.admissible.assign(inst.n(), 0);
  for (const auto& [i, j] : report.related) {
    for (Vertex u : Members(preclusters[i])) report.admissible[u] |= preclusters[j];
    for (Vertex v : Members(preclusters[j])) report.admissible[v] |= preclusters[i];
  }

  const Rational factor = 2 / (eps * eps) + 2 / eps;
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t related_size = 0;
    for (std::size_t j : related_to[i]) related_size += Size(preclusters[j]);
    const VertexSet k = preclusters[i];
    report.bound_slack.push_back(factor * WPlus(inst, k, inst.all() & ~k) -
                                 Rational(Size(k) * related_size));
  }
  return report;
}

inline PreclusteredInstance Assemble(const Preclustering& pre,
                                     const AdmissibilityReport& report) {
  return PreclusteredInstance{pre.preclusters, pre.precolor, report.admissible};
}

// Index of the cluster of `sol` containing each precluster; throws when some
// precluster is split across clusters.
inline std::vector<std::size_t> ContainingClusters(
    const Clustering& sol, std::span<const VertexSet> preclusters) {
  std::vector<std::size_t> out;
  for (VertexSet k : preclusters) {
    auto it = std::find_if(sol.parts.begin(), sol.parts.end(),
                           [&](VertexSet c) { return IsSubset(k, c); });
    if (it == sol.parts.end()) {
      throw ContractError("preclusters do not subdivide the clustering");
    }
    out.push_back(static_cast<std::size_t>(it - sol.parts.begin()));
  }
  return out;
}

// Split test for precluster K inside cluster C:
// w+(K, C\K) - w-(K, C\K) <= 2 eps (w+(K, V\K) + w-(K, K)).
inline bool SplitEligible(const ChromaticInstance& inst, VertexSet c, VertexSet k,
                          const Rational& epsilon) {
  const VertexSet rest = c & ~k;
  const std::int64_t lhs = WPlus(inst, k, rest) - WMinus(inst, k, rest);
  const std::int64_t base = WPlus(inst, k, inst.all() & ~k) + WMinus(inst, k, k);
  return Rational(lhs) <= 2 * epsilon * base;
}

// Repeatedly splits a precluster off its cluster while the split test holds
// and the cluster holds more than one precluster. Clusters are scanned in
// order, preclusters by smallest vertex; the first eligible pair is split
// (the remainder keeps the slot, K is appended) and the scan restarts. Both
// parts keep the cluster's color.
inline Clustering NearOptimalSplit(const ChromaticInstance& inst,
                                   const Clustering& sol,
                                   std::span<const VertexSet> preclusters,
                                   const Rational& epsilon) {
  RequireValid(inst, sol);
  if (!IsPartition(inst.n(), {preclusters.begin(), preclusters.end()})) {
    throw ContractError("preclusters must partition V");
  }
  ContainingClusters(sol, preclusters);
  std::vector<VertexSet> ordered(preclusters.begin(), preclusters.end());
  std::sort(ordered.begin(), ordered.end(),
            [](VertexSet a, VertexSet b) { return MinVertex(a) < MinVertex(b); });
  Clustering out = sol;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < out.parts.size() && !changed; ++ci) {
      const VertexSet c = out.parts[ci];
      std::vector<VertexSet> inside;
      for (VertexSet k : ordered) {
        if (IsSubset(k, c)) inside.push_back(k);
      }
      if (inside.size() <= 1) continue;
      for (VertexSet k : inside) {
        if (SplitEligible(inst, c, k, epsilon)) {
          out.parts[ci] = c & ~k;
          out.parts.push_back(k);
          out.colors.push_back(out.colors[ci]);
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

struct PreclusterBoundViolation {
  Vertex vertex;
  std::size_t precluster;
  // "off-color-inside" or "plus-outside".
  std::string inequality;
  std::int64_t count;
  Rational bound;
};

struct PreclusterBoundReport {
  bool pass = true;
  std::int64_t vertices_checked = 0;
  std::vector<PreclusterBoundViolation> violations;
};

// For every vertex u of every non-singleton precluster K with color c:
// |E^{-c}(u, K)| < eta(|K|-1) and |E^+(u, V\K)| < eta(|K|-1).
inline PreclusterBoundReport VerifyPreclusterBounds(
    const ChromaticInstance& inst, std::span<const VertexSet> preclusters,
    std::span<const std::optional<Color>> precolor, const PreclusterParams& params) {
  if (preclusters.size() != precolor.size()) {
    throw StructuralError("precolor must align with preclusters");
  }
  const Rational eta = params.eta();
  PreclusterBoundReport report;
  for (std::size_t i = 0; i < preclusters.size(); ++i) {
    const VertexSet k = preclusters[i];
    if (Size(k) < 2) continue;
    if (!precolor[i]) throw StructuralError("non-singleton precluster without color");
    const Rational bound = eta * (Size(k) - 1);
    for (Vertex u : Members(k)) {
      ++report.vertices_checked;
      const std::int64_t inside = OffColorInside(inst, u, k, *precolor[i]);
      const std::int64_t outside = PlusInto(inst, u, inst.all() & ~k);
      if (!(inside < bound)) {
        report.violations.push_back({u, i, "off-color-inside", inside, bound});
      }
      if (!(outside < bound)) {
        report.violations.push_back({u, i, "plus-outside", outside, bound});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace ccc
