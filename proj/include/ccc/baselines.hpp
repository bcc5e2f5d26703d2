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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ccc/instance.hpp"
#include "ccc/random.hpp"

namespace ccc {

// Every vertex alone, colored with the first color. Cost is |E+|.
inline Clustering Singletons(const ChromaticInstance& inst) {
  Clustering out;
  for (Vertex v = 0; v < inst.n(); ++v) {
    out.parts.push_back(Singleton(v));
    out.colors.push_back(0);
  }
  return out;
}

// Chromatic pivot: pick a uniformly random + edge uv (color c) whose endpoints
// are both unclustered, cluster u, v and every unclustered w joined to both by
// c-colored + edges, color the cluster c, and repeat. Vertices left once no
// such edge remains become singletons of the first color.
inline Clustering ChromaticPivot(const ChromaticInstance& inst,
                                 std::uint64_t seed) {
  Rng rng(seed);
  VertexSet remaining = inst.all();
  Clustering out;
  std::vector<std::pair<Vertex, Vertex>> candidates;
  while (true) {
    candidates.clear();
    for (Vertex u : Members(remaining)) {
      for (Vertex v : Members(inst.plus_neighbors(u) & remaining)) {
        if (u < v) candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto [u, v] = candidates[pick(rng)];
    const Color c = inst.label(u, v);
    const VertexSet cluster = Singleton(u) | Singleton(v) |
                              (inst.colored_neighbors(c, u) &
                               inst.colored_neighbors(c, v) & remaining);
    out.parts.push_back(cluster);
    out.colors.push_back(c);
    remaining &= ~cluster;
  }
  for (Vertex v : Members(remaining)) {
    out.parts.push_back(Singleton(v));
    out.colors.push_back(0);
  }
  return out;
}

}  // namespace ccc
