// Copyright 2026 The hdput Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hdput/linear_program.h"

#include <random>

#include <gtest/gtest.h>

namespace hdput {
namespace {

using Sense = ConstraintSense;

TEST(LinearProgramTest, TwoVariableVertex) {
  const LinearProgram lp{{1, 1},
                         {{{1, 2}, Sense::kLessEqual, 4},
                          {{3, 1}, Sense::kLessEqual, 6}}};
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 1.6, 1e-12);
  EXPECT_NEAR(s.x[1], 1.2, 1e-12);
  EXPECT_NEAR(s.value, 2.8, 1e-12);
  EXPECT_NEAR(s.duals[0], 0.4, 1e-12);
  EXPECT_NEAR(s.duals[1], 0.2, 1e-12);
}

TEST(LinearProgramTest, EqualityAndGreaterEqual) {
  // max x0 - x1 s.t. x0 + x1 = 1, x1 >= 0.25.
  const LinearProgram lp{{1, -1},
                         {{{1, 1}, Sense::kEqual, 1},
                          {{0, 1}, Sense::kGreaterEqual, 0.25}}};
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 0.5, 1e-12);
  EXPECT_NEAR(s.duals[0], 1.0, 1e-12);
  EXPECT_NEAR(s.duals[1], -2.0, 1e-12);
}

TEST(LinearProgramTest, NegativeRightHandSide) {
  // max -x0 s.t. -x0 <= -2.
  const LinearProgram lp{{-1}, {{{-1}, Sense::kLessEqual, -2}}};
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, -2.0, 1e-12);
  EXPECT_NEAR(s.duals[0], 1.0, 1e-12);
}

TEST(LinearProgramTest, Infeasible) {
  const LinearProgram lp{{1}, {{{1}, Sense::kLessEqual, -1}}};
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kInfeasible);
}

TEST(LinearProgramTest, Unbounded) {
  const LinearProgram lp{{1, 0}, {{{1, -1}, Sense::kLessEqual, 1}}};
  EXPECT_EQ(SolveLinearProgram(lp).status, LpStatus::kUnbounded);
}

TEST(LinearProgramTest, RedundantEqualities) {
  const LinearProgram lp{{1, 2},
                         {{{1, 1}, Sense::kEqual, 1},
                          {{2, 2}, Sense::kEqual, 2}}};
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 2.0, 1e-12);
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(LinearProgramTest, BealeDoesNotCycle) {
  const LinearProgram lp{
      {0.75, -20, 0.5, -6},
      {{{0.25, -8, -1, 9}, Sense::kLessEqual, 0},
       {{0.5, -12, -0.5, 3}, Sense::kLessEqual, 0},
       {{0, 0, 1, 0}, Sense::kLessEqual, 1}}};
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 1.25, 1e-12);
}

class LpDualityTest : public ::testing::TestWithParam<int> {};

TEST_P(LpDualityTest, StrongDualityOnRandomPackingPrograms) {
  std::mt19937_64 rng(GetParam());
  std::uniform_real_distribution<double> u(0.1, 2.0);
  const int rows = 2 + GetParam() % 5, cols = 2 + GetParam() % 4;
  LinearProgram lp;
  for (int j = 0; j < cols; ++j) lp.objective.push_back(u(rng));
  for (int i = 0; i < rows; ++i) {
    LinearConstraint c;
    for (int j = 0; j < cols; ++j) c.coefficients.push_back(u(rng));
    c.rhs = u(rng);
    lp.constraints.push_back(c);
  }
  const LpSolution s = SolveLinearProgram(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  double dual_value = 0.0;
  for (int i = 0; i < rows; ++i) {
    EXPECT_GE(s.duals[i], -1e-12);
    dual_value += s.duals[i] * lp.constraints[i].rhs;
    double lhs = 0.0;
    for (int j = 0; j < cols; ++j) {
      lhs += lp.constraints[i].coefficients[j] * s.x[j];
    }
    EXPECT_LE(lhs, lp.constraints[i].rhs + 1e-12);
  }
  EXPECT_NEAR(dual_value, s.value, 1e-10);
  for (int j = 0; j < cols; ++j) {
    double reduced = 0.0;
    for (int i = 0; i < rows; ++i) {
      reduced += s.duals[i] * lp.constraints[i].coefficients[j];
    }
    EXPECT_GE(reduced, lp.objective[j] - 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LpDualityTest, ::testing::Range(0, 30));

}  // namespace
}  // namespace hdput
