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

#include "support.hpp"

namespace ccc {
namespace {

using testing::T3;

ChromaticInstance OnePlusEdge(int colors = 1) {
  InstanceBuilder b(2, DefaultColorNames(colors));
  b.Plus(0, 1, 0);
  return b.Build();
}

FractionalClusterSolution HalfIntegral() {
  FractionalClusterSolution z;
  z.entries[{0, 0b11}] = Frac(1, 2);
  z.entries[{0, 0b01}] = Frac(1, 2);
  z.entries[{0, 0b10}] = Frac(1, 2);
  return z;
}

TEST(BuildClusterLp, TwoVerticesOnePlusEdge) {
  const ClusterLp model = BuildClusterLp(OnePlusEdge());
  ASSERT_EQ(model.columns.size(), 3u);
  EXPECT_EQ(model.columns[0], (ClusterColumn{0, 0b01}));
  EXPECT_EQ(model.columns[1], (ClusterColumn{0, 0b10}));
  EXPECT_EQ(model.columns[2], (ClusterColumn{0, 0b11}));
  EXPECT_EQ(model.lp.objective, (std::vector<Rational>{Frac(1, 2), Frac(1, 2), 0}));
  EXPECT_EQ(model.lp.constraints,
            (std::vector<std::vector<Rational>>{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(model.lp.rhs, (std::vector<Rational>{1, 1}));
}

TEST(BuildClusterLp, SingleVertex) {
  const ClusterLp model = BuildClusterLp(InstanceBuilder(1, {"r"}).Build());
  ASSERT_EQ(model.columns.size(), 1u);
  EXPECT_EQ(model.lp.objective, std::vector<Rational>{0});
}

TEST(BuildClusterLp, TwoVerticesOneMinusEdge) {
  EXPECT_EQ(BuildClusterLp(testing::AllMinus(2)).lp.objective,
            (std::vector<Rational>{0, 0, 1}));
}

TEST(BuildClusterLp, ColumnCapIsCapacityError) {
  EXPECT_THROW(BuildClusterLp(testing::AllMinus(5), 30), CapacityError);
  EXPECT_NO_THROW(BuildClusterLp(testing::AllMinus(5), 31));
  EXPECT_EQ(NumClusterColumns(InstanceBuilder(12, DefaultColorNames(4))
                                  .FillRemaining(kMinus)
                                  .Build()),
            16380);
}

TEST(SolveClusterLp, OnePlusEdgeMerges) {
  const ClusterLpOptimum lp = SolveClusterLp(OnePlusEdge());
  EXPECT_EQ(lp.value, 0);
  ASSERT_EQ(lp.z.support_size(), 1u);
  EXPECT_EQ(lp.z.entries.begin()->first, (ClusterColumn{0, 0b11}));
  EXPECT_EQ(lp.z.entries.begin()->second, 1);
}

TEST(SolveClusterLp, AllMinusIsSingletons) {
  const ClusterLpOptimum lp = SolveClusterLp(testing::AllMinus(4, 2));
  EXPECT_EQ(lp.value, 0);
  ASSERT_EQ(lp.z.support_size(), 4u);
  for (const auto& [col, value] : lp.z.entries) {
    EXPECT_EQ(Size(col.set), 1);
    EXPECT_EQ(value, 1);
  }
}

TEST(SolveClusterLp, T3BelowOpt) {
  const ClusterLpOptimum lp = SolveClusterLp(T3());
  EXPECT_LE(lp.value, SolveExact(T3()).opt_cost);
  EXPECT_EQ(lp.value, 1);
}

TEST(Marginals, IntegralTwoColors) {
  const ChromaticInstance inst = OnePlusEdge(2);
  FractionalClusterSolution z;
  z.entries[{0, 0b11}] = 1;
  const PairMarginals m = Marginals(inst, z);
  EXPECT_EQ(m.t[0][0], 0);
  EXPECT_EQ(m.t[1][0], 1);
  EXPECT_EQ(m.x_colored[0][0], 0);
  EXPECT_EQ(m.x_colored[1][0], 1);
  EXPECT_EQ(m.x_plain[0], 0);
}

TEST(Marginals, HalfIntegral) {
  const PairMarginals m = Marginals(OnePlusEdge(), HalfIntegral());
  EXPECT_EQ(m.x_colored[0][0], Frac(1, 2));
  EXPECT_EQ(m.x_plain[0], Frac(1, 2));
  EXPECT_EQ(m.t[0][0], 0);
  EXPECT_EQ(m.t[0][1], 0);
}

TEST(Marginals, InfeasibleZIsContractError) {
  FractionalClusterSolution z;
  z.entries[{0, 0b01}] = 1;
  EXPECT_THROW(Marginals(OnePlusEdge(), z), ContractError);
  z.entries[{0, 0b11}] = Frac(1, 2);
  EXPECT_THROW(Marginals(OnePlusEdge(), z), ContractError);
}

TEST(ObjX, IntegralEmbeddingMatchesDisagreementsOnT3) {
  int clusterings = 0;
  testing::ForEachClustering(3, 2, [&](const Clustering& c) {
    ++clusterings;
    const FractionalClusterSolution z = Embed(T3(), c);
    const Rational want = testing::NaiveDisagreements(T3(), c);
    EXPECT_EQ(ObjX(T3(), Marginals(T3(), z)), want);
    EXPECT_EQ(LpObjective(T3(), z), want);
  });
  // Colorings summed over the 5 partitions of three vertices.
  EXPECT_EQ(clusterings, 2 + 3 * 4 + 8);
}

TEST(ObjX, PerfectCliqueAndHalfIntegral) {
  const ChromaticInstance clique = testing::Clique(4, 2, 1);
  FractionalClusterSolution z;
  z.entries[{1, 0b1111}] = 1;
  EXPECT_EQ(ObjX(clique, Marginals(clique, z)), 0);
  EXPECT_EQ(ObjX(OnePlusEdge(), Marginals(OnePlusEdge(), HalfIntegral())), Frac(1, 2));
}

class ClusterLpProperty : public ::testing::TestWithParam<int> {};

TEST_P(ClusterLpProperty, IdentitiesOnRandomFeasibleZ) {
  Rng rng(DeriveSeed(41, GetParam()));
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int colors = 1 + static_cast<int>(rng() % 3);
    const ChromaticInstance inst = testing::RandomInstance(rng, n, colors);
    const FractionalClusterSolution z = testing::RandomConvexZ(rng, inst, 5);
    ASSERT_TRUE(IsFeasible(inst, z));
    const PairMarginals m = Marginals(inst, z);
    EXPECT_EQ(LpObjective(inst, z), ObjX(inst, m));
    for (Vertex v = 0; v < n; ++v) {
      Rational sum_t = 0;
      for (Color c = 0; c < colors; ++c) {
        sum_t += m.t[c][v];
        EXPECT_GE(m.t[c][v], 0);
        EXPECT_LE(m.t[c][v], 1);
      }
      EXPECT_EQ(sum_t, colors - 1);
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const std::size_t p = PairIndex(n, u, v);
        Rational together = 0;
        for (Color c = 0; c < colors; ++c) {
          EXPECT_EQ(testing::CrossingMass(z, c, u, v), m.x_colored[c][p] - m.t[c][u]);
          EXPECT_LE(m.x_plain[p], m.x_colored[c][p]);
          EXPECT_GE(m.x_colored[c][p], 0);
          EXPECT_LE(m.x_colored[c][p], 1);
          together += 1 - m.x_colored[c][p];
        }
        EXPECT_EQ(1 - m.x_plain[p], together);
      }
    }
  }
}

TEST_P(ClusterLpProperty, OptimumIsARelaxation) {
  Rng rng(DeriveSeed(42, GetParam()));
  const int n = 1 + static_cast<int>(rng() % 6);
  const int colors = 1 + static_cast<int>(rng() % 3);
  const ChromaticInstance inst = testing::RandomInstance(rng, n, colors);
  const ClusterLpOptimum lp = SolveClusterLp(inst);
  const OptimumReport exact = SolveExact(inst);
  EXPECT_LE(lp.value, exact.opt_cost);
  EXPECT_GE(lp.value, 0);
  EXPECT_LE(lp.z.support_size(), static_cast<std::size_t>(n));
  EXPECT_EQ(lp.value, LpObjective(inst, lp.z));
  EXPECT_EQ(lp.value, ObjX(inst, Marginals(inst, lp.z)));
  EXPECT_EQ(LpObjective(inst, Embed(inst, exact.one_optimal)), exact.opt_cost);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ClusterLpProperty, ::testing::Range(0, 12));

}  // namespace
}  // namespace ccc
