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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hdput/errors.h"

namespace hdput {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Minimizer {
 public:
  Minimizer(const SimplexObjective& objective, const FrankWolfeOptions& options,
            std::size_t dim)
      : objective_(objective),
        options_(options),
        dim_(dim),
        grad_(dim),
        trial_(dim),
        trial_grad_(dim) {}

  FrankWolfeResult Run(std::vector<double> x) {
    FrankWolfeResult result;
    double value = objective_.value(x);
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::kDomainError,
                  "Frank-Wolfe start point has a non-finite objective");
    }
    std::vector<double> direction(dim_);
    double gap = kInf;
    int it = 0;
    for (; it < options_.max_iterations; ++it) {
      objective_.gradient(x, grad_);
      double dot = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] > 0.0) dot += x[i] * grad_[i];
      }
      std::size_t s = dim_;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (!Allowed(i)) continue;
        if (s == dim_ || grad_[i] < grad_[s]) s = i;
      }
      std::size_t v = dim_;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] <= 0.0) continue;
        if (v == dim_ || grad_[i] > grad_[v]) v = i;
      }
      gap = dot - grad_[s];
      if (std::isnan(gap)) break;
      if (gap <= options_.gap_tolerance) {
        result.converged = true;
        break;
      }
      const double away_gap = grad_[v] - dot;
      double max_step;
      bool away = false;
      if (gap >= away_gap || x[v] >= 1.0) {
        for (std::size_t i = 0; i < dim_; ++i) direction[i] = -x[i];
        direction[s] += 1.0;
        max_step = 1.0;
      } else {
        for (std::size_t i = 0; i < dim_; ++i) direction[i] = x[i];
        direction[v] -= 1.0;
        max_step = x[v] / (1.0 - x[v]);
        away = true;
      }
      const double slope = away ? -away_gap : -gap;
      const double step =
          options_.line_search == LineSearch::kExact
              ? ExactStep(x, direction, max_step)
              : BacktrackingStep(x, direction, max_step, value, slope);
      if (step <= 0.0) break;
      for (std::size_t i = 0; i < dim_; ++i) x[i] += step * direction[i];
      if (away && step >= max_step) x[v] = 0.0;
      Clean(x);
      const double next = objective_.value(x);
      if (!(next <= value + 1e-15 * std::max(1.0, std::abs(value)))) {
        // Rounding pushed us uphill; undo and stop.
        for (std::size_t i = 0; i < dim_; ++i) x[i] -= step * direction[i];
        Clean(x);
        break;
      }
      value = next;
    }
    result.point = std::move(x);
    result.value = value;
    result.gap = gap;
    result.iterations = it;
    return result;
  }

 private:
  bool Allowed(std::size_t i) const {
    return options_.allowed.empty() || options_.allowed[i];
  }

  static void Clean(std::vector<double>& x) {
    double sum = 0.0;
    for (double& t : x) {
      if (t < 0.0) t = 0.0;
      sum += t;
    }
    for (double& t : x) t /= sum;
  }

  double Slope(const std::vector<double>& x,
               const std::vector<double>& direction, double step) {
    for (std::size_t i = 0; i < dim_; ++i) {
      trial_[i] = std::max(0.0, x[i] + step * direction[i]);
    }
    objective_.gradient(trial_, trial_grad_);
    double slope = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (direction[i] != 0.0) slope += trial_grad_[i] * direction[i];
    }
    return slope;
  }

  // Largest step in [0, max_step] at which the directional derivative is
  // still nonpositive, to bisection precision.
  double ExactStep(const std::vector<double>& x,
                   const std::vector<double>& direction, double max_step) {
    const double end_slope = Slope(x, direction, max_step);
    if (end_slope <= 0.0) return max_step;
    double lo = 0.0;
    double hi = max_step;
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double s = Slope(x, direction, mid);
      if (s <= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  double BacktrackingStep(const std::vector<double>& x,
                          const std::vector<double>& direction,
                          double max_step, double value, double slope) {
    double norm2 = 0.0;
    for (double d : direction) norm2 += d * d;
    if (lipschitz_ <= 0.0) {
      const double eps = 1e-4 * max_step;
      const double s1 = Slope(x, direction, eps);
      lipschitz_ = std::max(std::abs(s1 - slope) / (eps * norm2), 1e-6);
      if (!std::isfinite(lipschitz_)) lipschitz_ = 1.0;
    }
    const double decrease = -slope;
    for (int k = 0; k < 200; ++k) {
      const double step = std::min(decrease / (lipschitz_ * norm2), max_step);
      for (std::size_t i = 0; i < dim_; ++i) {
        trial_[i] = std::max(0.0, x[i] + step * direction[i]);
      }
      const double next = objective_.value(trial_);
      if (next <= value - step * decrease +
                      0.5 * step * step * lipschitz_ * norm2) {
        lipschitz_ *= 0.9;
        return step;
      }
      lipschitz_ *= 2.0;
    }
    return 0.0;
  }

  const SimplexObjective& objective_;
  const FrankWolfeOptions& options_;
  std::size_t dim_;
  std::vector<double> grad_;
  std::vector<double> trial_;
  std::vector<double> trial_grad_;
  double lipschitz_ = 0.0;
};

void ValidateStart(const std::vector<double>& start,
                   const FrankWolfeOptions& options) {
  if (start.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty Frank-Wolfe start point");
  }
  if (!options.allowed.empty() && options.allowed.size() != start.size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "allowed mask does not match the start point");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (start[i] < 0.0 ||
        (start[i] > 0.0 && !options.allowed.empty() && !options.allowed[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "Frank-Wolfe start point is not on the allowed face", i);
    }
    sum += start[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNotADistribution,
                "Frank-Wolfe start point is not on the simplex");
  }
}

}  // namespace

FrankWolfeResult MinimizeOverSimplex(const SimplexObjective& objective,
                                     std::vector<double> start,
                                     const FrankWolfeOptions& options) {
  ValidateStart(start, options);
  Minimizer minimizer(objective, options, start.size());
  return minimizer.Run(std::move(start));
}

FrankWolfeResult MaximizeOverSimplex(const SimplexObjective& objective,
                                     std::vector<double> start,
                                     const FrankWolfeOptions& options) {
  SimplexObjective negated{
      [&objective](std::span<const double> x) { return -objective.value(x); },
      [&objective](std::span<const double> x, std::span<double> g) {
        objective.gradient(x, g);
        for (double& t : g) t = -t;
      }};
  FrankWolfeResult result = MinimizeOverSimplex(negated, std::move(start),
                                                options);
  result.value = -result.value;
  return result;
}

}  // namespace hdput
