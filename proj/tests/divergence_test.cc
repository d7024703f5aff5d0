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


#include "hdput/divergence.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hdput/oracle.h"
#include "test_util.h"

namespace hdput {
namespace {

const double kLog2 = std::log(2.0);

ProbVector P(std::vector<double> v) { return ProbVector::FromRaw(std::move(v)); }

TEST(FDivergenceTest, GeneratorsVanishAtOne) {
  for (const FDivergence& f :
       {FDivergence::KullbackLeibler(), FDivergence::Hellinger(2.0),
        FDivergence::Hellinger(0.5), FDivergence::TotalVariation()}) {
    EXPECT_EQ(f(1.0), 0.0) << f.name();
    EXPECT_EQ(f.G(1.0), 0.0) << f.name();
  }
}

TEST(FDivergenceTest, LimitsAtZero) {
  EXPECT_EQ(FDivergence::KullbackLeibler().at_zero(), 0.0);
  EXPECT_DOUBLE_EQ(FDivergence::Hellinger(3.0).at_zero(), -0.5);
  EXPECT_EQ(FDivergence::TotalVariation().at_zero(), 0.5);
}

TEST(FDivergenceTest, HellingerRejectsOrderOne) {
  EXPECT_THROW(FDivergence::Hellinger(1.0), Error);
  EXPECT_THROW(FDivergence::Hellinger(-1.0), Error);
}

TEST(FDivergenceTest, ConvexOnSamples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t(1e-3, 10.0), lam(0.0, 1.0);
  for (const FDivergence& f :
       {FDivergence::KullbackLeibler(), FDivergence::Hellinger(2.0),
        FDivergence::Hellinger(0.5), FDivergence::TotalVariation()}) {
    for (int i = 0; i < 500; ++i) {
      const double a = t(rng), b = t(rng), l = lam(rng);
      EXPECT_LE(f(l * a + (1 - l) * b), l * f(a) + (1 - l) * f(b) + 1e-9);
    }
  }
}

TEST(FDivergenceValueTest, KlOfEqualIsZero) {
  const ProbVector p = P({0.2, 0.3, 0.5});
  EXPECT_EQ(FDivergenceValue(FDivergence::KullbackLeibler(), p, p), 0.0);
}

TEST(FDivergenceValueTest, HellingerTwoPointMassAgainstUniform) {
  EXPECT_DOUBLE_EQ(
      FDivergenceValue(FDivergence::Hellinger(2.0), P({1, 0}), P({0.5, 0.5})),
      1.0);
}

TEST(FDivergenceValueTest, TotalVariationDisjoint) {
  EXPECT_DOUBLE_EQ(
      FDivergenceValue(FDivergence::TotalVariation(), P({1, 0}), P({0, 1})),
      1.0);
}

TEST(FDivergenceValueTest, KlInfiniteOutsideSupport) {
  EXPECT_TRUE(std::isinf(KlDivergence(P({0.5, 0.5}), P({1, 0}))));
}

TEST(FDivergenceValueTest, AlphabetMismatch) {
  try {
    KlDivergence(P({1.0}), P({0.5, 0.5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphabetMismatch);
  }
}

TEST(FDivergenceValueTest, NonnegativeWithEqualityOnlyAtEquality) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const ProbVector p = testing::RandomPrior(rng, 4);
    const ProbVector q = testing::RandomPrior(rng, 4);
    for (const FDivergence& f :
         {FDivergence::KullbackLeibler(), FDivergence::Hellinger(2.0)}) {
      EXPECT_GT(FDivergenceValue(f, p, q), 0.0);
      EXPECT_NEAR(FDivergenceValue(f, p, p), 0.0, 1e-15);
    }
  }
}

TEST(RenyiDivergenceTest, OrderOneIdentityUniform) {
  EXPECT_NEAR(RenyiDivergence(1.0, P({0.5, 0.5}), Channel::Identity(2),
                              P({0.5, 0.5})),
              kLog2, 1e-15);
}

TEST(RenyiDivergenceTest, OrderTwoIdentityUniform) {
  EXPECT_NEAR(RenyiDivergence(2.0, P({0.5, 0.5}), Channel::Identity(2),
                              P({0.5, 0.5})),
              kLog2, 1e-15);
}

TEST(RenyiDivergenceTest, IndependentChannelIsZero) {
  const ProbVector q = P({0.2, 0.8});
  const Channel ch = Channel::Constant(3, q);
  for (double a : {1.0, 1.5, 2.0, 7.0, kInfinity}) {
    EXPECT_NEAR(RenyiDivergence(a, P({0.1, 0.6, 0.3}), ch, q), 0.0, 1e-14);
  }
}

TEST(RenyiDivergenceTest, RejectsOrderBelowOne) {
  try {
    RenyiDivergence(0.5, P({1.0}), Channel::Identity(1), P({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidAlpha);
  }
}

TEST(SibsonTest, IdentityUniformOrderTwo) {
  EXPECT_NEAR(
      SibsonMutualInformation(2.0, P({0.5, 0.5}), Channel::Identity(2)), kLog2,
      1e-14);
}

TEST(SibsonTest, InfiniteOrderCountsColumnMaxima) {
  EXPECT_NEAR(SibsonMutualInformation(kInfinity, P({0.5, 0.5}),
                                      Channel::Identity(2)),
              kLog2, 1e-15);
}

TEST(SibsonTest, InfiniteOrderIgnoresZeroPriorRows) {
  EXPECT_NEAR(SibsonMutualInformation(kInfinity, P({1.0, 0.0}),
                                      Channel::Identity(2)),
              0.0, 1e-15);
}

TEST(SibsonTest, ConstantRowsAreZero) {
  const Channel ch = Channel::Constant(3, P({0.3, 0.7}));
  for (double a : {1.5, 2.0, 30.0, kInfinity}) {
    EXPECT_NEAR(SibsonMutualInformation(a, P({0.2, 0.2, 0.6}), ch), 0.0,
                1e-14);
  }
}

TEST(SibsonTest, RejectsOrderOne) {
  EXPECT_THROW(
      SibsonMutualInformation(1.0, P({0.5, 0.5}), Channel::Identity(2)),
      Error);
}

class SibsonPropertyTest : public ::testing::TestWithParam<int> {};

double GridRenyiMinimum(double alpha, const ProbVector& px, const Channel& ch) {
  return GridMinimizeOverSimplex(
             [&](std::span<const double> q) {
               const std::vector<double> raw(q.begin(), q.end());
               return RenyiDivergence(alpha, px, ch,
                                      ProbVector::FromRaw(raw, 1e-9));
             },
             {200, static_cast<int>(ch.output_size())})
      .value;
}

TEST_P(SibsonPropertyTest, EqualsGridMinimumOfRenyi) {
  std::mt19937_64 rng(GetParam());
  const ProbVector px = testing::RandomPrior(rng, 3);
  const Channel ch = testing::RandomChannel(rng, 3, 3);
  for (double a : {1.5, 2.0, 5.0}) {
    const double sibson = SibsonMutualInformation(a, px, ch);
    const double grid = GridRenyiMinimum(a, px, ch);
    EXPECT_LE(sibson, grid + 1e-12) << "alpha " << a;
    EXPECT_NEAR(sibson, grid, 2e-3) << "alpha " << a;
    EXPECT_NEAR(RenyiDivergence(a, px, ch, SibsonOptimalOutput(a, px, ch)),
                sibson, 1e-12);
  }
}

// At infinite order the objective log max_y c_y / q(y) has a kink at the
// optimum, so the grid error is first order: rounding q* to the grid costs
// at most -log(1 - 1 / (k min_y q*(y))).
TEST_P(SibsonPropertyTest, InfiniteOrderWithinGridRoundingSlack) {
  std::mt19937_64 rng(GetParam());
  const ProbVector px = testing::RandomPrior(rng, 3);
  const Channel ch = testing::RandomChannel(rng, 3, 3);
  const double sibson = SibsonMutualInformation(kInfinity, px, ch);
  const double grid = GridRenyiMinimum(kInfinity, px, ch);
  const ProbVector q = SibsonOptimalOutput(kInfinity, px, ch);
  const double smallest = *std::min_element(q.values().begin(), q.values().end());
  const double slack = -std::log(1.0 - 1.0 / (200.0 * smallest));
  EXPECT_LE(sibson, grid + 1e-12);
  EXPECT_LE(grid - sibson, slack);
  EXPECT_NEAR(RenyiDivergence(kInfinity, px, ch, q), sibson, 1e-12);
}

TEST_P(SibsonPropertyTest, NondecreasingInOrder) {
  std::mt19937_64 rng(100 + GetParam());
  const ProbVector px = testing::RandomPrior(rng, 4);
  const Channel ch = testing::RandomChannel(rng, 4, 3);
  double prev = MutualInformation(px, ch);
  for (double a : {1.1, 2.0, 5.0, kInfinity}) {
    const double v = SibsonMutualInformation(a, px, ch);
    EXPECT_GE(v, prev - 1e-12) << "alpha " << a;
    prev = v;
  }
}

TEST_P(SibsonPropertyTest, LargeOrderApproachesInfinity) {
  std::mt19937_64 rng(200 + GetParam());
  const ProbVector px = testing::RandomPrior(rng, 3);
  const Channel ch = testing::RandomChannel(rng, 3, 3);
  EXPECT_NEAR(SibsonMutualInformation(1e4, px, ch),
              SibsonMutualInformation(kInfinity, px, ch), 1e-3);
}

INSTANTIATE_TEST_SUITE_P(Seeds, SibsonPropertyTest, ::testing::Range(0, 10));

}  // namespace
}  // namespace hdput
