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
#include <string>
#include <vector>

#include "ccc/instance.hpp"
#include "ccc/random.hpp"

namespace ccc {

// Planted clusters with sign and color noise.
struct PlantedModel {
  int n = 6;
  int k = 2;
  int palette = 2;
  // Probability of flipping each pair's sign.
  double flip_prob = 0.0;
  // Probability of redrawing the color of each + edge.
  double recolor_prob = 0.0;
  std::uint64_t seed = 1;

  void Validate() const {
    if (n < 1) throw StructuralError("planted model needs n >= 1");
    if (n > kMaxVertices) throw CapacityError("planted model n exceeds vertex limit");
    if (k < 1 || k > n) throw StructuralError("planted model needs 1 <= k <= n");
    if (palette < 1) throw StructuralError("planted model needs a nonempty palette");
    if (!(flip_prob >= 0.0 && flip_prob <= 1.0)) {
      throw StructuralError("flip probability must lie in [0, 1]");
    }
    if (!(recolor_prob >= 0.0 && recolor_prob <= 1.0)) {
      throw StructuralError("recolor probability must lie in [0, 1]");
    }
  }
};

inline std::vector<std::string> DefaultColorNames(int count) {
  std::vector<std::string> names;
  for (int c = 0; c < count; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

// Vertex v joins planted cluster v mod k, whose color is (v mod k) mod palette.
inline Clustering PlantedClustering(const PlantedModel& model) {
  model.Validate();
  Clustering out;
  out.parts.assign(model.k, 0);
  for (Vertex v = 0; v < model.n; ++v) out.parts[v % model.k] |= Singleton(v);
  for (int j = 0; j < model.k; ++j) out.colors.push_back(j % model.palette);
  return out;
}

// Pairs are visited in lexicographic order. Each pair first takes its planted
// label (+ with the cluster color inside, - across), then flips sign with
// probability flip_prob (a new + edge draws a uniform color), then a + edge
// redraws its color uniformly with probability recolor_prob. Draws happen in
// a fixed pattern so the output depends only on the model.
inline ChromaticInstance GeneratePlanted(const PlantedModel& model) {
  model.Validate();
  Rng rng(model.seed);
  std::bernoulli_distribution flip(model.flip_prob);
  std::bernoulli_distribution recolor(model.recolor_prob);
  std::uniform_int_distribution<int> color(0, model.palette - 1);
  InstanceBuilder builder(model.n, DefaultColorNames(model.palette));
  for (Vertex u = 0; u < model.n; ++u) {
    for (Vertex v = u + 1; v < model.n; ++v) {
      const bool same = u % model.k == v % model.k;
      Label label = same ? static_cast<Label>((u % model.k) % model.palette) : kMinus;
      const bool flipped = flip(rng);
      const int fresh_color = color(rng);
      const bool redraw = recolor(rng);
      const int redrawn_color = color(rng);
      if (flipped) label = label == kMinus ? static_cast<Label>(fresh_color) : kMinus;
      if (label != kMinus && redraw) label = static_cast<Label>(redrawn_color);
      builder.Set(u, v, label);
    }
  }
  return builder.Build();
}

// Every pair + with probability plus_prob, colored uniformly.
inline ChromaticInstance GenerateUniform(int n, int palette, double plus_prob,
                                         std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution plus(plus_prob);
  std::uniform_int_distribution<int> color(0, palette - 1);
  InstanceBuilder builder(n, DefaultColorNames(palette));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool is_plus = plus(rng);
      const int c = color(rng);
      builder.Set(u, v, is_plus ? static_cast<Label>(c) : kMinus);
    }
  }
  return builder.Build();
}

}  // namespace ccc
