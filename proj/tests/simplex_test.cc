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

using Lp = StandardFormLp<Rational>;

Lp MakeLp(std::vector<Rational> c, std::vector<std::vector<Rational>> a,
          std::vector<Rational> b) {
  return Lp{std::move(c), std::move(a), std::move(b)};
}

void ExpectCertificates(const Lp& lp, const LpSolution<Rational>& sol) {
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  ASSERT_EQ(static_cast<int>(sol.x.size()), lp.num_cols());
  Rational value = 0;
  for (int j = 0; j < lp.num_cols(); ++j) {
    EXPECT_GE(sol.x[j], 0);
    value += lp.objective[j] * sol.x[j];
  }
  EXPECT_EQ(value, sol.objective_value);
  for (int i = 0; i < lp.num_rows(); ++i) {
    Rational row = 0;
    for (int j = 0; j < lp.num_cols(); ++j) row += lp.constraints[i][j] * sol.x[j];
    EXPECT_EQ(row, lp.rhs[i]);
  }
  ASSERT_EQ(static_cast<int>(sol.reduced_costs.size()), lp.num_cols());
  for (const Rational& r : sol.reduced_costs) EXPECT_GE(r, 0);
  for (int b : sol.basis) EXPECT_EQ(sol.reduced_costs[b], 0);
}

TEST(SolveLp, OneConstraintVertex) {
  const Lp lp = MakeLp({-1, 0}, {{1, 1}}, {1});
  const auto sol = SolveLp(lp);
  ExpectCertificates(lp, sol);
  EXPECT_EQ(sol.x, (std::vector<Rational>{1, 0}));
  EXPECT_EQ(sol.objective_value, -1);
}

TEST(SolveLp, Infeasible) {
  EXPECT_EQ(SolveLp(MakeLp({0}, {{1}}, {-1})).status, LpStatus::kInfeasible);
  EXPECT_EQ(SolveLp(MakeLp({0, 0}, {{1, 1}, {1, 1}}, {1, 2})).status,
            LpStatus::kInfeasible);
}

TEST(SolveLp, Unbounded) {
  EXPECT_EQ(SolveLp(MakeLp({-1, 0}, {{1, -1}}, {0})).status, LpStatus::kUnbounded);
}

TEST(SolveLp, RedundantRowsAreHandled) {
  const Lp lp = MakeLp({1, 2, 3}, {{1, 1, 1}, {2, 2, 2}, {1, 0, 1}}, {2, 4, 1});
  const auto sol = SolveLp(lp);
  ExpectCertificates(lp, sol);
  EXPECT_EQ(sol.objective_value, 3);
}

TEST(SolveLp, NegativeRhsIsFlipped) {
  const Lp lp = MakeLp({1, 1}, {{-1, -2}}, {-4});
  const auto sol = SolveLp(lp);
  ExpectCertificates(lp, sol);
  EXPECT_EQ(sol.objective_value, 2);
}

TEST(SolveLp, BealeCyclingExampleTerminates) {
  const Lp lp = MakeLp(
      {0, 0, 0, Frac(-3, 4), 150, Frac(-1, 50), 6},
      {{1, 0, 0, Frac(1, 4), -60, Frac(-1, 25), 9},
       {0, 1, 0, Frac(1, 2), -90, Frac(-1, 50), 3},
       {0, 0, 1, 0, 0, 1, 0}},
      {0, 0, 1});
  const auto sol = SolveLp(lp);
  ExpectCertificates(lp, sol);
  EXPECT_EQ(sol.objective_value, Frac(-1, 20));
}

TEST(SolveLp, DimensionMismatchIsStructuralError) {
  EXPECT_THROW(SolveLp(MakeLp({1, 2}, {{1}}, {1})), StructuralError);
  EXPECT_THROW(SolveLp(MakeLp({1}, {{1}, {1}}, {1})), StructuralError);
}

TEST(SolveLp, IterationCapIsDiagnosticError) {
  const Lp lp = MakeLp({-1, -1, 0}, {{1, 2, 1}, {3, 1, 0}}, {4, 5});
  SimplexOptions opts;
  opts.iteration_cap = 0;
  EXPECT_THROW(SolveLp(lp, opts), DiagnosticError);
  ExpectCertificates(lp, SolveLp(lp));
}

TEST(SolveLp, EmptyProgram) {
  const auto sol = SolveLp(MakeLp({2, 3}, {}, {}));
  EXPECT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, 0);
}

TEST(BruteForceLp, AgreesOnHandExamples) {
  EXPECT_EQ(testing::BruteForceLp(MakeLp({-1, 0}, {{1, 1}}, {1})).value, -1);
  EXPECT_EQ(testing::BruteForceLp(MakeLp({0}, {{1}}, {-1})).status, LpStatus::kInfeasible);
  EXPECT_EQ(testing::BruteForceLp(MakeLp({-1, 0}, {{1, -1}}, {0})).status,
            LpStatus::kUnbounded);
}

class SimplexOracle : public ::testing::TestWithParam<int> {};

TEST_P(SimplexOracle, MatchesBasicSolutionEnumeration) {
  Rng rng(DeriveSeed(31, GetParam()));
  for (int rep = 0; rep < 25; ++rep) {
    const Lp lp = testing::RandomSmallLp(rng);
    const auto sol = SolveLp(lp);
    const auto brute = testing::BruteForceLp(lp);
    ASSERT_EQ(sol.status, brute.status) << "rep " << rep;
    if (sol.status == LpStatus::kOptimal) {
      ExpectCertificates(lp, sol);
      EXPECT_EQ(sol.objective_value, brute.value);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SimplexOracle, ::testing::Range(0, 8));

}  // namespace
}  // namespace ccc
