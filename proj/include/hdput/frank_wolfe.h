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


// Away-step Frank-Wolfe over the probability simplex. The linear
// minimization oracle on the simplex is exact (a coordinate vertex), so the
// Frank-Wolfe gap <grad, x - s> is an upper bound on the suboptimality of a
// convex objective and serves as the stopping certificate.

#ifndef HDPUT_FRANK_WOLFE_H_
#define HDPUT_FRANK_WOLFE_H_

#include <functional>
#include <span>
#include <vector>

namespace hdput {

struct SimplexObjective {
  // May return +inf outside the effective domain.
  std::function<double(std::span<const double>)> value;
  // Called only where value() is finite, or during line search near the
  // boundary, where entries may be infinite.
  std::function<void(std::span<const double>, std::span<double>)> gradient;
};

enum class LineSearch {
  // Bisection on the directional derivative.
  kExact,
  // Sufficient-decrease backtracking on a local Lipschitz estimate; uses
  // only function values along the segment.
  kBacktracking,
};

struct FrankWolfeOptions {
  double gap_tolerance = 1e-8;
  int max_iterations = 200000;
  LineSearch line_search = LineSearch::kExact;
  // Coordinates the iterate may put mass on. Empty means all.
  std::vector<bool> allowed;
};

struct FrankWolfeResult {
  std::vector<double> point;
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes a convex objective over the simplex starting at `start`, which
// must be a distribution supported on allowed coordinates with a finite
// objective value.
FrankWolfeResult MinimizeOverSimplex(const SimplexObjective& objective,
                                     std::vector<double> start,
                                     const FrankWolfeOptions& options = {});

// Maximizes a concave objective; result.value is the maximum found and
// result.gap the ascent certificate.
FrankWolfeResult MaximizeOverSimplex(const SimplexObjective& objective,
                                     std::vector<double> start,
                                     const FrankWolfeOptions& options = {});

}  // namespace hdput

#endif  // HDPUT_FRANK_WOLFE_H_
