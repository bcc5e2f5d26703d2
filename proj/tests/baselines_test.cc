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


#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace ccc {
namespace {

using testing::T3;

TEST(ChromaticPivot, MonochromaticCliqueIsOneCluster) {
  const ChromaticInstance inst = testing::Clique(6, 3, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Clustering c = ChromaticPivot(inst, seed);
    EXPECT_EQ(c.parts, std::vector<VertexSet>{inst.all()});
    EXPECT_EQ(c.colors, std::vector<Color>{2});
    EXPECT_EQ(CountDisagreements(inst, c), 0);
  }
}

TEST(ChromaticPivot, AllMinusIsSingletons) {
  const ChromaticInstance inst = testing::AllMinus(5, 2);
  const Clustering c = ChromaticPivot(inst, 3);
  EXPECT_EQ(c, Singletons(inst));
  EXPECT_EQ(CountDisagreements(inst, c), 0);
}

TEST(ChromaticPivot, T3BothFirstPicksCostOne) {
  std::set<std::vector<VertexSet>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Clustering c = Canonical(ChromaticPivot(T3(), seed));
    EXPECT_EQ(CountDisagreements(T3(), c), 1);
    seen.insert(c.parts);
  }
  const std::set<std::vector<VertexSet>> both = {{0b011, 0b100}, {0b001, 0b110}};
  EXPECT_EQ(seen, both);
}

TEST(Singletons, Costs) {
  EXPECT_EQ(CountDisagreements(T3(), Singletons(T3())), 2);
  EXPECT_EQ(CountDisagreements(testing::AllMinus(4), Singletons(testing::AllMinus(4))), 0);
  const ChromaticInstance one = InstanceBuilder(1, {"r"}).Build();
  EXPECT_EQ(CountDisagreements(one, Singletons(one)), 0);
}

class BaselineProperty : public ::testing::TestWithParam<int> {};

TEST_P(BaselineProperty, PivotClustersHaveTwoCommonPivots) {
  Rng rng(DeriveSeed(71, GetParam()));
  const int n = 2 + static_cast<int>(rng() % 30);
  const int colors = 1 + static_cast<int>(rng() % 3);
  const ChromaticInstance inst = testing::RandomInstance(rng, n, colors, 0.6);
  const Clustering c = ChromaticPivot(inst, rng());
  ASSERT_TRUE(IsValid(inst, c));
  EXPECT_EQ(CountDisagreements(inst, Singletons(inst)), inst.num_plus_edges());
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const VertexSet s = c.parts[i];
    if (Size(s) == 1) continue;
    const Color l = c.colors[i];
    bool found = false;
    for (Vertex u : Members(s)) {
      for (Vertex v : Members(s)) {
        if (u >= v || inst.label(u, v) != l) continue;
        const VertexSet others = s & ~Singleton(u) & ~Singleton(v);
        if (IsSubset(others, inst.colored_neighbors(l, u) & inst.colored_neighbors(l, v))) {
          found = true;
        }
      }
    }
    EXPECT_TRUE(found) << "cluster " << i;
  }
}

TEST_P(BaselineProperty, LeftoverSingletonsHaveNoPlusEdgeBetweenThem) {
  Rng rng(DeriveSeed(72, GetParam()));
  const int n = 2 + static_cast<int>(rng() % 30);
  const ChromaticInstance inst = testing::RandomInstance(rng, n, 2, 0.3);
  const Clustering c = ChromaticPivot(inst, rng());
  VertexSet singles = 0;
  for (VertexSet s : c.parts) {
    if (Size(s) == 1) singles |= s;
  }
  // Pivot clusters all have two or more vertices, so singletons are leftovers.
  for (Vertex u : Members(singles)) EXPECT_EQ(inst.plus_neighbors(u) & singles, 0u);
}

INSTANTIATE_TEST_SUITE_P(Seeds, BaselineProperty, ::testing::Range(0, 15));

}  // namespace
}  // namespace ccc
