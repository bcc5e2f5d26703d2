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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccc/common.hpp"

namespace ccc {

// Label of one unordered pair: kMinus, or the color id of a + edge.
using Label = std::int16_t;
inline constexpr Label kMinus = -1;

// A complete signed graph on vertices 0..n-1 whose + edges carry colors.
// Immutable once built; every query is const and thread-safe.
class ChromaticInstance {
 public:
  // `labels` is the flat upper-triangular table indexed by PairIndex.
  ChromaticInstance(int n, std::vector<std::string> color_names,
                    std::vector<Label> labels)
      : n_(n), color_names_(std::move(color_names)), labels_(std::move(labels)) {
    if (n_ < 1) throw StructuralError("instance needs at least one vertex");
    if (n_ > kMaxVertices) {
      throw CapacityError("instances are limited to " +
                          std::to_string(kMaxVertices) + " vertices");
    }
    if (color_names_.empty()) throw StructuralError("instance needs a color");
    std::set<std::string> seen(color_names_.begin(), color_names_.end());
    if (seen.size() != color_names_.size()) {
      throw StructuralError("duplicate color name");
    }
    if (labels_.size() != PairCount(n_)) {
      throw StructuralError("label table must cover every unordered pair");
    }
    plus_.assign(n_, 0);
    colored_.assign(color_names_.size(), std::vector<VertexSet>(n_, 0));
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        Label l = labels_[PairIndex(n_, u, v)];
        if (l == kMinus) continue;
        if (l < 0 || l >= num_colors()) {
          throw StructuralError("+ edge uses an undeclared color");
        }
        plus_[u] |= Singleton(v);
        plus_[v] |= Singleton(u);
        colored_[l][u] |= Singleton(v);
        colored_[l][v] |= Singleton(u);
      }
    }
  }

  int n() const { return n_; }
  int num_colors() const { return static_cast<int>(color_names_.size()); }
  const std::vector<std::string>& color_names() const { return color_names_; }
  const std::string& color_name(Color c) const { return color_names_.at(c); }
  std::optional<Color> FindColor(const std::string& name) const {
    auto it = std::find(color_names_.begin(), color_names_.end(), name);
    if (it == color_names_.end()) return std::nullopt;
    return static_cast<Color>(it - color_names_.begin());
  }

  Label label(Vertex u, Vertex v) const { return labels_[PairIndex(n_, u, v)]; }
  bool is_plus(Vertex u, Vertex v) const { return label(u, v) != kMinus; }
  const std::vector<Label>& labels() const { return labels_; }

  // + neighbours of u, and + neighbours joined to u by a c-colored edge.
  VertexSet plus_neighbors(Vertex u) const { return plus_[u]; }
  VertexSet colored_neighbors(Color c, Vertex u) const { return colored_[c][u]; }

  VertexSet all() const { return FullSet(n_); }

  std::int64_t num_plus_edges() const {
    std::int64_t total = 0;
    for (Vertex u = 0; u < n_; ++u) total += Size(plus_[u]);
    return total / 2;
  }

  friend bool operator==(const ChromaticInstance& a, const ChromaticInstance& b) {
    return a.n_ == b.n_ && a.color_names_ == b.color_names_ &&
           a.labels_ == b.labels_;
  }

 private:
  int n_;
  std::vector<std::string> color_names_;
  std::vector<Label> labels_;
  std::vector<VertexSet> plus_;
  std::vector<std::vector<VertexSet>> colored_;
};

// Collects pair labels one at a time; Build() rejects incomplete tables.
class InstanceBuilder {
 public:
  InstanceBuilder(int n, std::vector<std::string> color_names)
      : n_(n), color_names_(std::move(color_names)) {
    if (n_ < 1) throw StructuralError("instance needs at least one vertex");
    if (n_ > kMaxVertices) {
      throw CapacityError("instances are limited to " +
                          std::to_string(kMaxVertices) + " vertices");
    }
    labels_.assign(PairCount(n_), kMinus);
    set_.assign(PairCount(n_), false);
  }

  InstanceBuilder& Set(Vertex u, Vertex v, Label label) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
      throw StructuralError("invalid pair (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
    }
    if (label != kMinus &&
        (label < 0 || label >= static_cast<Label>(color_names_.size()))) {
      throw StructuralError("+ edge uses an undeclared color");
    }
    std::size_t idx = PairIndex(n_, u, v);
    if (set_[idx]) {
      throw StructuralError("pair (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") given twice");
    }
    set_[idx] = true;
    labels_[idx] = label;
    return *this;
  }

  InstanceBuilder& Plus(Vertex u, Vertex v, Color c) {
    return Set(u, v, static_cast<Label>(c));
  }
  InstanceBuilder& Minus(Vertex u, Vertex v) { return Set(u, v, kMinus); }

  // Labels every pair not yet set with `label`.
  InstanceBuilder& FillRemaining(Label label) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!set_[PairIndex(n_, u, v)]) Set(u, v, label);
      }
    }
    return *this;
  }

  ChromaticInstance Build() const {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!set_[PairIndex(n_, u, v)]) {
          throw StructuralError("missing pair (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
        }
      }
    }
    return ChromaticInstance(n_, color_names_, labels_);
  }

 private:
  int n_;
  std::vector<std::string> color_names_;
  std::vector<Label> labels_;
  std::vector<bool> set_;
};

// A partition of V with one color per part.
struct Clustering {
  std::vector<VertexSet> parts;
  std::vector<Color> colors;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Sorts parts by their smallest vertex, keeping colors aligned.
inline Clustering Canonical(Clustering c) {
  std::vector<std::size_t> order(c.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return MinVertex(c.parts[a]) < MinVertex(c.parts[b]);
  });
  Clustering out;
  for (std::size_t i : order) {
    out.parts.push_back(c.parts[i]);
    out.colors.push_back(c.colors[i]);
  }
  return out;
}

// True iff `parts` are nonempty, disjoint and cover 0..n-1.
inline bool IsPartition(int n, const std::vector<VertexSet>& parts) {
  VertexSet seen = 0;
  for (VertexSet p : parts) {
    if (p == 0 || (p & seen) != 0 || !IsSubset(p, FullSet(n))) return false;
    seen |= p;
  }
  return seen == FullSet(n);
}

inline bool IsValid(const ChromaticInstance& inst, const Clustering& sol) {
  if (sol.parts.size() != sol.colors.size()) return false;
  if (!IsPartition(inst.n(), sol.parts)) return false;
  return std::all_of(sol.colors.begin(), sol.colors.end(), [&](Color c) {
    return c >= 0 && c < inst.num_colors();
  });
}

inline void RequireValid(const ChromaticInstance& inst, const Clustering& sol) {
  if (!IsValid(inst, sol)) {
    throw StructuralError("clustering is not a colored partition of V");
  }
}

// |delta+(S)|: + edges with exactly one endpoint in S.
inline std::int64_t DeltaPlusCount(const ChromaticInstance& inst, VertexSet s) {
  std::int64_t total = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    total += Size(inst.plus_neighbors(std::countr_zero(rest)) & ~s);
  }
  return total;
}

// Pairs inside S that are not c-colored + edges.
inline std::int64_t MinusEllInsideCount(const ChromaticInstance& inst,
                                        VertexSet s, Color c) {
  std::int64_t good = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    good += Size(inst.colored_neighbors(c, std::countr_zero(rest)) & s);
  }
  return Choose2(Size(s)) - good / 2;
}

// Unordered + pairs {u, v} with u in S and v in T (each pair counted once).
inline std::int64_t WPlus(const ChromaticInstance& inst, VertexSet s,
                          VertexSet t) {
  std::int64_t ordered = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    ordered += Size(inst.plus_neighbors(std::countr_zero(rest)) & t);
  }
  VertexSet both = s & t;
  std::int64_t inside_both = 0;
  for (VertexSet rest = both; rest != 0; rest &= rest - 1) {
    inside_both += Size(inst.plus_neighbors(std::countr_zero(rest)) & both);
  }
  return ordered - inside_both / 2;
}

// Unordered - pairs {u, v} with u in S and v in T (each pair counted once).
inline std::int64_t WMinus(const ChromaticInstance& inst, VertexSet s,
                           VertexSet t) {
  std::int64_t ordered = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    Vertex u = std::countr_zero(rest);
    ordered += Size(t & ~Singleton(u));
  }
  std::int64_t both = Size(s & t);
  std::int64_t all_pairs = ordered - Choose2(both);
  return all_pairs - WPlus(inst, s, t);
}

// Disagreements contributed by the pairs inside one cluster of color c.
inline std::int64_t InsideCost(const ChromaticInstance& inst, VertexSet s,
                               Color c) {
  return MinusEllInsideCount(inst, s, c);
}

inline std::int64_t CountDisagreements(const ChromaticInstance& inst,
                                       const Clustering& sol) {
  RequireValid(inst, sol);
  std::int64_t inside = 0;
  std::int64_t crossing = 0;
  for (std::size_t i = 0; i < sol.parts.size(); ++i) {
    inside += InsideCost(inst, sol.parts[i], sol.colors[i]);
    crossing += DeltaPlusCount(inst, sol.parts[i]);
  }
  return inside + crossing / 2;
}

inline std::int64_t CountAgreements(const ChromaticInstance& inst,
                                    const Clustering& sol) {
  RequireValid(inst, sol);
  std::vector<int> cluster_of(inst.n());
  for (std::size_t i = 0; i < sol.parts.size(); ++i) {
    for (Vertex v : Members(sol.parts[i])) cluster_of[v] = static_cast<int>(i);
  }
  std::int64_t agreed = 0;
  for (Vertex u = 0; u < inst.n(); ++u) {
    for (Vertex v = u + 1; v < inst.n(); ++v) {
      bool together = cluster_of[u] == cluster_of[v];
      Label l = inst.label(u, v);
      if (l == kMinus) {
        agreed += together ? 0 : 1;
      } else {
        agreed += (together && sol.colors[cluster_of[u]] == l) ? 1 : 0;
      }
    }
  }
  return agreed;
}

// Partition K, colors for its non-singleton parts, and admissible cross pairs.
struct PreclusteredInstance {
  std::vector<VertexSet> preclusters;
  // Aligned with `preclusters`; engaged exactly for parts of size >= 2.
  std::vector<std::optional<Color>> precolor;
  // admissible[u] holds every v with {u, v} admissible. Symmetric.
  std::vector<VertexSet> admissible;

  bool IsAdmissible(Vertex u, Vertex v) const {
    return Contains(admissible[u], v);
  }

  std::size_t NumAdmissiblePairs() const {
    std::size_t total = 0;
    for (VertexSet s : admissible) total += Size(s);
    return total / 2;
  }

  friend bool operator==(const PreclusteredInstance&,
                         const PreclusteredInstance&) = default;
};

inline bool IsValid(const ChromaticInstance& inst,
                    const PreclusteredInstance& pre) {
  const int n = inst.n();
  if (!IsPartition(n, pre.preclusters)) return false;
  if (pre.precolor.size() != pre.preclusters.size()) return false;
  if (pre.admissible.size() != static_cast<std::size_t>(n)) return false;
  std::vector<int> owner(n);
  for (std::size_t i = 0; i < pre.preclusters.size(); ++i) {
    bool big = Size(pre.preclusters[i]) >= 2;
    if (big != pre.precolor[i].has_value()) return false;
    if (big && (*pre.precolor[i] < 0 || *pre.precolor[i] >= inst.num_colors())) {
      return false;
    }
    for (Vertex v : Members(pre.preclusters[i])) owner[v] = static_cast<int>(i);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!IsSubset(pre.admissible[u], FullSet(n))) return false;
    for (Vertex v : Members(pre.admissible[u])) {
      if (!pre.IsAdmissible(v, u)) return false;
      if (owner[u] == owner[v]) return false;
    }
  }
  return true;
}

// (a) every precluster lies in one cluster; (b) non-singleton preclusters sit
// in clusters of their precolor; (c) co-clustered cross pairs are admissible.
inline bool Respects(const ChromaticInstance& inst,
                     const PreclusteredInstance& pre, const Clustering& sol) {
  RequireValid(inst, sol);
  for (std::size_t i = 0; i < pre.preclusters.size(); ++i) {
    VertexSet k = pre.preclusters[i];
    auto it = std::find_if(sol.parts.begin(), sol.parts.end(),
                           [&](VertexSet c) { return IsSubset(k, c); });
    if (it == sol.parts.end()) return false;
    if (pre.precolor[i] && sol.colors[it - sol.parts.begin()] != *pre.precolor[i]) {
      return false;
    }
  }
  std::vector<int> owner(inst.n());
  for (std::size_t i = 0; i < pre.preclusters.size(); ++i) {
    for (Vertex v : Members(pre.preclusters[i])) owner[v] = static_cast<int>(i);
  }
  for (VertexSet c : sol.parts) {
    std::vector<Vertex> vs = Members(c);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (owner[vs[a]] != owner[vs[b]] && !pre.IsAdmissible(vs[a], vs[b])) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ccc
