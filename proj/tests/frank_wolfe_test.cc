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


#include "hdput/frank_wolfe.h"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

namespace hdput {
namespace {

SimplexObjective SquaredDistance(std::vector<double> target) {
  return {[target](std::span<const double> q) {
            double s = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
              s += (q[i] - target[i]) * (q[i] - target[i]);
            }
            return s;
          },
          [target](std::span<const double> q, std::span<double> g) {
            for (std::size_t i = 0; i < q.size(); ++i) {
              g[i] = 2.0 * (q[i] - target[i]);
            }
          }};
}

SimplexObjective CrossEntropy(std::vector<double> p) {
  return {[p](std::span<const double> q) {
            double s = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
              if (p[i] == 0.0) continue;
              if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
              s -= p[i] * std::log(q[i]);
            }
            return s;
          },
          [p](std::span<const double> q, std::span<double> g) {
            for (std::size_t i = 0; i < q.size(); ++i) {
              g[i] = p[i] == 0.0 ? 0.0 : -p[i] / q[i];
            }
          }};
}

TEST(FrankWolfeTest, ProjectsInteriorTarget) {
  const auto r = MinimizeOverSimplex(SquaredDistance({0.2, 0.3, 0.5}),
                                     {1.0, 0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.gap, 1e-8);
  EXPECT_NEAR(r.point[0], 0.2, 1e-4);
  EXPECT_NEAR(r.point[2], 0.5, 1e-4);
}

TEST(FrankWolfeTest, ReachesFaceWithAwaySteps) {
  // The minimizer sits on a face; away steps drop the third vertex.
  const auto r = MinimizeOverSimplex(SquaredDistance({0.7, 0.6, -0.3}),
                                     {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.point[0], 0.55, 1e-6);
  EXPECT_NEAR(r.point[1], 0.45, 1e-6);
  EXPECT_EQ(r.point[2], 0.0);
}

TEST(FrankWolfeTest, CrossEntropyMinimizerIsTarget) {
  const auto r =
      MinimizeOverSimplex(CrossEntropy({0.75, 0.25}), {0.5, 0.5});
  EXPECT_TRUE(r.converged);
  const double entropy = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  EXPECT_NEAR(r.value, entropy, 1e-8);
  EXPECT_NEAR(r.point[0], 0.75, 1e-4);
}

TEST(FrankWolfeTest, BacktrackingMatchesExact) {
  FrankWolfeOptions options;
  options.line_search = LineSearch::kBacktracking;
  const auto r = MinimizeOverSimplex(CrossEntropy({0.1, 0.6, 0.3}),
                                     {1.0 / 3, 1.0 / 3, 1.0 / 3}, options);
  const auto e = MinimizeOverSimplex(CrossEntropy({0.1, 0.6, 0.3}),
                                     {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(r.value, e.value, 1e-8);
}

TEST(FrankWolfeTest, RespectsAllowedMask) {
  FrankWolfeOptions options;
  options.allowed = {true, false, true};
  const auto r = MinimizeOverSimplex(SquaredDistance({0.2, 0.6, 0.2}),
                                     {0.5, 0.0, 0.5}, options);
  EXPECT_EQ(r.point[1], 0.0);
  EXPECT_NEAR(r.point[0], 0.5, 1e-6);
}

TEST(FrankWolfeTest, MaximizeNegatesProblem) {
  // Entropy is maximized by the uniform distribution.
  const SimplexObjective entropy{
      [](std::span<const double> q) {
        double s = 0.0;
        for (double v : q) s -= v > 0.0 ? v * std::log(v) : 0.0;
        return s;
      },
      [](std::span<const double> q, std::span<double> g) {
        for (std::size_t i = 0; i < q.size(); ++i) {
          g[i] = q[i] > 0.0 ? -std::log(q[i]) - 1.0
                            : std::numeric_limits<double>::infinity();
        }
      }};
  const auto r = MaximizeOverSimplex(entropy, {0.7, 0.2, 0.1});
  EXPECT_NEAR(r.value, std::log(3.0), 1e-8);
}

TEST(FrankWolfeTest, RejectsStartOffSimplex) {
  EXPECT_ANY_THROW(
      MinimizeOverSimplex(SquaredDistance({0.5, 0.5}), {0.7, 0.7}));
}

}  // namespace
}  // namespace hdput
