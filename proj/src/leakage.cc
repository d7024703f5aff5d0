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


#include "hdput/leakage.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>

#include "hdput/frank_wolfe.h"
#include "hdput/linear_program.h"

namespace hdput {
namespace {

std::vector<std::size_t> ValidateSupport(std::span<const std::size_t> support,
                                         std::size_t input_size) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "input support must be nonempty");
  }
  std::vector<std::size_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= input_size) {
    throw Error(ErrorCode::kInvalidArgument,
                "support index " + std::to_string(sorted.back()) +
                    " is outside the input alphabet",
                sorted.back());
  }
  return sorted;
}

double BinomialCount(int total, int parts) {
  // C(total + parts - 1, parts - 1) in floating point.
  double count = 1.0;
  for (int i = 1; i < parts; ++i) {
    count = count * static_cast<double>(total + i) / static_cast<double>(i);
  }
  return count;
}

// Calls fn on every composition of `total` into `parts` nonnegative parts in
// lexicographic order.
template <typename Fn>
void ForEachComposition(int total, int parts, Fn&& fn) {
  std::vector<int> c(parts, 0);
  c[parts - 1] = total;
  while (true) {
    fn(c);
    int suffix = c[parts - 1];
    int i = parts - 2;
    while (i >= 0 && suffix == 0) {
      suffix += c[i];
      --i;
    }
    // Now c[i+1..] sums to `suffix` > 0, or i < 0 and we are done.
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < parts - 1; ++j) c[j] = 0;
    c[parts - 1] = suffix - 1;
  }
}

// Start points for an ascent over distributions on `support` (embedded in
// `size` coordinates), scored by `score`.
template <typename Score>
std::vector<std::vector<double>> AscentStarts(
    std::size_t size, const std::vector<std::size_t>& support,
    const AscentOptions& options, Score&& score) {
  const int parts = static_cast<int>(support.size());
  std::vector<std::vector<double>> starts;
  std::vector<double> uniform(size, 0.0);
  for (std::size_t x : support) uniform[x] = 1.0 / parts;
  starts.push_back(uniform);
  if (parts == 1) return starts;

  int resolution = std::max(1, options.grid_resolution);
  while (resolution > 1 &&
         BinomialCount(resolution, parts) >
             static_cast<double>(options.grid_budget)) {
    --resolution;
  }
  if (options.grid_starts > 0 &&
      BinomialCount(resolution, parts) <=
          static_cast<double>(options.grid_budget)) {
    std::vector<std::pair<double, std::vector<double>>> scored;
    std::vector<double> point(size, 0.0);
    ForEachComposition(resolution, parts, [&](const std::vector<int>& c) {
      for (int i = 0; i < parts; ++i) {
        point[support[i]] =
            0.9 * static_cast<double>(c[i]) / resolution + 0.1 / parts;
      }
      scored.emplace_back(score(point), point);
    });
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });
    const std::size_t keep =
        std::min<std::size_t>(scored.size(), options.grid_starts);
    for (std::size_t i = 0; i < keep; ++i) {
      starts.push_back(std::move(scored[i].second));
    }
  }
  std::mt19937_64 rng(options.seed);
  std::exponential_distribution<double> exponential(1.0);
  for (int r = 0; r < options.random_starts; ++r) {
    std::vector<double> point(size, 0.0);
    double sum = 0.0;
    for (std::size_t x : support) {
      point[x] = exponential(rng);
      sum += point[x];
    }
    for (std::size_t x : support) point[x] /= sum;
    starts.push_back(std::move(point));
  }
  return starts;
}

std::vector<bool> MaskOf(std::size_t size,
                         const std::vector<std::size_t>& support) {
  std::vector<bool> mask(size, false);
  for (std::size_t x : support) mask[x] = true;
  return mask;
}

// log sum_y peak_y (sum_x p_x a_xy)^(1/alpha), a_xy = (ch(y|x)/peak_y)^alpha,
// peak_y = max over the support. Its maximum times alpha/(alpha-1) is the
// maximal alpha-leakage.
class SibsonAscent {
 public:
  SibsonAscent(double alpha, const Channel& ch,
               const std::vector<std::size_t>& support)
      : alpha_(alpha),
        inputs_(ch.input_size()),
        outputs_(ch.output_size()),
        peak_(outputs_, 0.0),
        scaled_(inputs_ * outputs_, 0.0),
        column_(outputs_) {
    for (std::size_t y = 0; y < outputs_; ++y) {
      for (std::size_t x : support) peak_[y] = std::max(peak_[y], ch(x, y));
    }
    for (std::size_t x : support) {
      for (std::size_t y = 0; y < outputs_; ++y) {
        if (peak_[y] > 0.0) {
          scaled_[x * outputs_ + y] = std::pow(ch(x, y) / peak_[y], alpha_);
        }
      }
    }
  }

  double Value(std::span<const double> p) {
    Columns(p);
    double sum = 0.0;
    for (std::size_t y = 0; y < outputs_; ++y) {
      if (peak_[y] > 0.0) sum += peak_[y] * std::pow(column_[y], 1.0 / alpha_);
    }
    return std::log(sum);
  }

  void Gradient(std::span<const double> p, std::span<double> grad) {
    Columns(p);
    double sum = 0.0;
    std::vector<double> weight(outputs_, 0.0);
    for (std::size_t y = 0; y < outputs_; ++y) {
      if (peak_[y] == 0.0) continue;
      sum += peak_[y] * std::pow(column_[y], 1.0 / alpha_);
      weight[y] = column_[y] > 0.0
                      ? peak_[y] / alpha_ * std::pow(column_[y], 1.0 / alpha_ - 1.0)
                      : kInfinity;
    }
    for (std::size_t x = 0; x < inputs_; ++x) {
      double g = 0.0;
      for (std::size_t y = 0; y < outputs_; ++y) {
        const double a = scaled_[x * outputs_ + y];
        if (a > 0.0) g += weight[y] * a;
      }
      grad[x] = g / sum;
    }
  }

 private:
  void Columns(std::span<const double> p) {
    std::fill(column_.begin(), column_.end(), 0.0);
    for (std::size_t x = 0; x < inputs_; ++x) {
      if (p[x] == 0.0) continue;
      for (std::size_t y = 0; y < outputs_; ++y) {
        column_[y] += p[x] * scaled_[x * outputs_ + y];
      }
    }
  }

  double alpha_;
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<double> peak_;
  std::vector<double> scaled_;
  std::vector<double> column_;
};

ProbVector ToProbVector(std::vector<double> v) {
  for (double& t : v) t = std::max(t, 0.0);
  double sum = 0.0;
  for (double t : v) sum += t;
  for (double& t : v) t /= sum;
  return ProbVector::FromRaw(std::move(v), 1e-9);
}

// Objective sum_x w(x) sum_y Q(y) f(ch(y|x) / Q(y)) over Q on the output
// simplex, for inputs with w(x) > 0.
SimplexObjective DependentObjective(const FDivergence& f,
                                    std::span<const double> weights,
                                    const Channel& ch) {
  return SimplexObjective{
      [&f, weights, &ch](std::span<const double> q) {
        double total = 0.0;
        for (std::size_t x = 0; x < ch.input_size(); ++x) {
          if (weights[x] == 0.0) continue;
          double row = 0.0;
          for (std::size_t y = 0; y < ch.output_size(); ++y) {
            row += f.Perspective(ch(x, y), q[y]);
          }
          total += weights[x] * row;
        }
        return total;
      },
      [&f, weights, &ch](std::span<const double> q, std::span<double> grad) {
        for (std::size_t y = 0; y < ch.output_size(); ++y) {
          double g = 0.0;
          for (std::size_t x = 0; x < ch.input_size(); ++x) {
            if (weights[x] == 0.0) continue;
            const double w = ch(x, y);
            double d;
            if (q[y] > 0.0) {
              d = f.PerspectiveDerivative(w, q[y]);
            } else if (w == 0.0) {
              d = f.at_zero();
            } else if (std::isinf(f.slope_at_infinity())) {
              d = -kInfinity;
            } else {
              d = f.PerspectiveDerivative(w, w * 1e-12);
            }
            g += weights[x] * d;
          }
          grad[y] = g;
        }
      }};
}

struct InnerSolution {
  double value;
  std::vector<double> q;
  double gap;
  int iterations;
};

// `warm`, when nonempty, is tried as the starting point before the default
// start.
InnerSolution SolveDependentSmooth(const FDivergence& f,
                                   std::span<const double> weights,
                                   const Channel& ch, double tolerance,
                                   std::span<const double> warm = {}) {
  const std::size_t outputs = ch.output_size();
  std::vector<double> marginal(outputs, 0.0);
  for (std::size_t x = 0; x < ch.input_size(); ++x) {
    for (std::size_t y = 0; y < outputs; ++y) {
      marginal[y] += weights[x] * ch(x, y);
    }
  }
  const SimplexObjective objective = DependentObjective(f, weights, ch);
  std::vector<double> start(outputs, 0.0);
  std::size_t reach = 0;
  for (std::size_t y = 0; y < outputs; ++y) reach += marginal[y] > 0.0;
  for (std::size_t y = 0; y < outputs; ++y) {
    if (marginal[y] > 0.0) start[y] = 1.0 / static_cast<double>(reach);
  }
  if (!warm.empty() && std::isfinite(objective.value(warm))) {
    start.assign(warm.begin(), warm.end());
  }
  if (!std::isfinite(objective.value(start))) {
    const ProbVector fallback = ToProbVector(marginal);
    start.assign(fallback.values().begin(), fallback.values().end());
  }
  if (!std::isfinite(objective.value(start))) {
    return InnerSolution{kInfinity, start, kInfinity, 0};
  }
  FrankWolfeOptions fw;
  fw.gap_tolerance = tolerance;
  FrankWolfeResult r = MinimizeOverSimplex(objective, std::move(start), fw);
  return InnerSolution{std::max(r.value, 0.0), std::move(r.point), r.gap,
                       r.iterations};
}

// Total-variation leakages are piecewise linear; both are solved exactly as
// linear programs. Variables: Q (outputs), t_xy >= |ch(y|x) - Q(y)| per
// input in `rows`, and optionally an epigraph variable z.
struct TvProgram {
  LinearProgram lp;
  std::size_t outputs;
  std::size_t z_index;
  std::vector<std::size_t> epigraph_rows;
};

TvProgram BuildTvProgram(const Channel& ch, const std::vector<std::size_t>& rows,
                         std::span<const double> weights, bool minimax) {
  TvProgram program;
  const std::size_t m = ch.output_size();
  program.outputs = m;
  const std::size_t num_t = rows.size() * m;
  const std::size_t num_vars = m + num_t + (minimax ? 1 : 0);
  program.z_index = m + num_t;
  LinearProgram& lp = program.lp;
  lp.objective.assign(num_vars, 0.0);
  if (minimax) {
    lp.objective[program.z_index] = -1.0;
  } else {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t y = 0; y < m; ++y) {
        lp.objective[m + r * m + y] = -0.5 * weights[rows[r]];
      }
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t y = 0; y < m; ++y) {
      const double w = ch(rows[r], y);
      LinearConstraint above{std::vector<double>(num_vars, 0.0),
                             ConstraintSense::kGreaterEqual, w};
      above.coefficients[m + r * m + y] = 1.0;
      above.coefficients[y] = 1.0;
      lp.constraints.push_back(std::move(above));
      LinearConstraint below{std::vector<double>(num_vars, 0.0),
                             ConstraintSense::kGreaterEqual, -w};
      below.coefficients[m + r * m + y] = 1.0;
      below.coefficients[y] = -1.0;
      lp.constraints.push_back(std::move(below));
    }
    if (minimax) {
      LinearConstraint epi{std::vector<double>(num_vars, 0.0),
                           ConstraintSense::kGreaterEqual, 0.0};
      epi.coefficients[program.z_index] = 1.0;
      for (std::size_t y = 0; y < m; ++y) {
        epi.coefficients[m + r * m + y] = -0.5;
      }
      program.epigraph_rows.push_back(lp.constraints.size());
      lp.constraints.push_back(std::move(epi));
    }
  }
  LinearConstraint simplex{std::vector<double>(num_vars, 0.0),
                           ConstraintSense::kEqual, 1.0};
  for (std::size_t y = 0; y < m; ++y) simplex.coefficients[y] = 1.0;
  lp.constraints.push_back(std::move(simplex));
  return program;
}

LpSolution SolveOrThrow(const LinearProgram& lp) {
  LpSolution s = SolveLinearProgram(lp);
  if (s.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kDomainError,
                "total-variation linear program did not reach optimality");
  }
  return s;
}

std::vector<double> Head(const std::vector<double>& v, std::size_t n) {
  return std::vector<double>(v.begin(), v.begin() + static_cast<long>(n));
}

}  // namespace

double AlphaLoss(double alpha, double p_hat) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "alpha-loss is defined for 1 < alpha < inf; use LogLoss or "
                "ZeroOneLoss for the limits");
  }
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p_hat must lie in [0, 1]");
  }
  return alpha / (alpha - 1.0) * (1.0 - std::pow(p_hat, 1.0 - 1.0 / alpha));
}

double LogLoss(double p_hat) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p_hat must lie in [0, 1]");
  }
  return -std::log(p_hat);
}

double ZeroOneLoss(double p_hat) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p_hat must lie in [0, 1]");
  }
  return 1.0 - p_hat;
}

std::vector<std::size_t> FullSupport(std::size_t size) {
  std::vector<std::size_t> support(size);
  for (std::size_t i = 0; i < size; ++i) support[i] = i;
  return support;
}

LeakageEstimate MaximalAlphaLeakageDetailed(
    double alpha, const Channel& ch, std::span<const std::size_t> support,
    const std::optional<ProbVector>& px, const AscentOptions& options) {
  if (!(alpha >= 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must lie in [1, inf]");
  }
  LeakageEstimate estimate;
  if (alpha == 1.0) {
    if (!px) {
      throw Error(ErrorCode::kMissingPrior,
                  "maximal alpha-leakage at alpha = 1 needs the input prior");
    }
    estimate.value = MutualInformation(*px, ch);
    estimate.input = *px;
    return estimate;
  }
  const std::vector<std::size_t> sup = ValidateSupport(support, ch.input_size());
  if (std::isinf(alpha)) {
    double sum = 0.0;
    for (std::size_t y = 0; y < ch.output_size(); ++y) {
      double peak = 0.0;
      for (std::size_t x : sup) peak = std::max(peak, ch(x, y));
      sum += peak;
    }
    estimate.value = std::max(std::log(sum), 0.0);
    estimate.input = ProbVector::UniformOn(ch.input_size(), sup);
    return estimate;
  }

  SibsonAscent ascent(alpha, ch, sup);
  const SimplexObjective objective{
      [&ascent](std::span<const double> p) { return ascent.Value(p); },
      [&ascent](std::span<const double> p, std::span<double> g) {
        ascent.Gradient(p, g);
      }};
  const double scale = alpha / (alpha - 1.0);
  FrankWolfeOptions fw;
  fw.gap_tolerance = options.tolerance / scale;
  fw.max_iterations = options.max_iterations;
  fw.allowed = MaskOf(ch.input_size(), sup);
  const auto starts =
      AscentStarts(ch.input_size(), sup, options,
                   [&ascent](const std::vector<double>& p) {
                     return ascent.Value(p);
                   });
  double best = -kInfinity;
  for (const auto& start : starts) {
    FrankWolfeResult r = MaximizeOverSimplex(objective, start, fw);
    ++estimate.starts;
    estimate.iterations += r.iterations;
    if (r.value > best) {
      best = r.value;
      estimate.input = ToProbVector(r.point);
      estimate.gap = r.gap * scale;
    }
  }
  estimate.value = std::max(scale * best, 0.0);
  return estimate;
}

double MaximalAlphaLeakage(double alpha, const Channel& ch,
                           std::span<const std::size_t> support,
                           const std::optional<ProbVector>& px,
                           const AscentOptions& options) {
  return MaximalAlphaLeakageDetailed(alpha, ch, support, px, options).value;
}

DependentLeakage LfDependent(const FDivergence& f, const ProbVector& px,
                             const Channel& ch, double tolerance) {
  if (px.size() != ch.input_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "prior size does not match the channel inputs");
  }
  DependentLeakage result;
  if (f.kind() == FDivergenceKind::kTotalVariation) {
    const std::vector<std::size_t> rows = px.Support();
    TvProgram program = BuildTvProgram(ch, rows, px.values(), false);
    const LpSolution s = SolveOrThrow(program.lp);
    result.value = std::max(-s.value, 0.0);
    result.q = ToProbVector(Head(s.x, program.outputs));
    result.iterations = s.pivots;
    return result;
  }
  InnerSolution inner = SolveDependentSmooth(f, px.values(), ch, tolerance);
  result.value = inner.value;
  result.q = ToProbVector(std::move(inner.q));
  result.gap = inner.gap;
  result.iterations = inner.iterations;
  return result;
}

IndependentLeakage LfIndependent(const FDivergence& f, const Channel& ch,
                                 std::span<const std::size_t> support,
                                 const AscentOptions& options) {
  const std::vector<std::size_t> sup = ValidateSupport(support, ch.input_size());
  IndependentLeakage result;
  if (f.kind() == FDivergenceKind::kTotalVariation) {
    // Linear in P and convex in Q, so sup-inf = inf_Q max_x TV(ch_x, Q); the
    // maximizing P is read off the epigraph duals.
    const std::vector<double> unit(ch.input_size(), 1.0);
    TvProgram program = BuildTvProgram(ch, sup, unit, true);
    const LpSolution s = SolveOrThrow(program.lp);
    result.value = std::max(-s.value, 0.0);
    result.q = ToProbVector(Head(s.x, program.outputs));
    std::vector<double> input(ch.input_size(), 0.0);
    for (std::size_t r = 0; r < sup.size(); ++r) {
      input[sup[r]] = std::max(0.0, -s.duals[program.epigraph_rows[r]]);
    }
    double mass = 0.0;
    for (double t : input) mass += t;
    result.input = mass > 0.0 ? ToProbVector(std::move(input))
                              : ProbVector::UniformOn(ch.input_size(), sup);
    result.iterations = s.pivots;
    return result;
  }

  // Saddle point: the inner infimum is solved by Frank-Wolfe; by Danskin's
  // theorem the outer gradient at P is (D_f(ch_x || Q*(P)))_x.
  constexpr double kInnerTolerance = 1e-13;
  std::vector<double> cached_p;
  InnerSolution cached{0.0, {}, 0.0, 0};
  int inner_iterations = 0;
  auto inner = [&](std::span<const double> p) -> const InnerSolution& {
    if (cached_p.size() != p.size() ||
        !std::equal(p.begin(), p.end(), cached_p.begin())) {
      cached_p.assign(p.begin(), p.end());
      std::vector<double> warm = std::move(cached.q);
      cached = SolveDependentSmooth(f, p, ch, kInnerTolerance, warm);
      inner_iterations += cached.iterations;
    }
    return cached;
  };
  const SimplexObjective objective{
      [&](std::span<const double> p) { return inner(p).value; },
      [&](std::span<const double> p, std::span<double> grad) {
        const InnerSolution& s = inner(p);
        for (std::size_t x = 0; x < ch.input_size(); ++x) {
          double d = 0.0;
          for (std::size_t y = 0; y < ch.output_size(); ++y) {
            d += f.Perspective(ch(x, y), s.q[y]);
          }
          grad[x] = d;
        }
      }};
  FrankWolfeOptions fw;
  fw.gap_tolerance = options.tolerance;
  fw.max_iterations = std::min(options.max_iterations, 5000);
  fw.line_search = LineSearch::kBacktracking;
  fw.allowed = MaskOf(ch.input_size(), sup);
  // The outer objective is concave in P (a pointwise infimum of functions
  // linear in P), so a few starts suffice; each grid point costs an inner
  // solve, hence the small grid.
  AscentOptions screened = options;
  screened.grid_starts = std::min(options.grid_starts, 1);
  screened.grid_budget = std::min<std::int64_t>(options.grid_budget, 2000);
  const auto starts = AscentStarts(
      ch.input_size(), sup, screened,
      [&](const std::vector<double>& p) { return inner(p).value; });
  double best = -kInfinity;
  for (const auto& start : starts) {
    FrankWolfeResult r = MaximizeOverSimplex(objective, start, fw);
    result.iterations += r.iterations;
    if (r.value > best) {
      best = r.value;
      result.input = ToProbVector(r.point);
      result.gap = r.gap;
    }
  }
  const InnerSolution& at_best = inner(result.input.values());
  result.q = ToProbVector(at_best.q);
  result.value = std::max(best, 0.0);
  return result;
}

double Lemma1Bridge(double alpha, double value) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::kInvalidAlpha, "bridge needs 1 < alpha < inf");
  }
  if (std::isinf(value) && value > 0.0) return kInfinity;
  const double argument = 1.0 + (alpha - 1.0) * value;
  if (!(argument > 0.0)) {
    throw Error(ErrorCode::kDomainError,
                "1 + (alpha - 1) * value must be positive; the leakage value "
                "is invalid");
  }
  return std::log(argument) / (alpha - 1.0);
}

double EvaluateLeakage(const LeakageQuery& query, const Channel& ch,
                       const AscentOptions& options) {
  const std::vector<std::size_t> full = FullSupport(ch.input_size());
  if (const auto* q = std::get_if<MaxAlphaQuery>(&query)) {
    return MaximalAlphaLeakage(q->alpha, ch, q->support.value_or(full), q->px,
                               options);
  }
  if (const auto* q = std::get_if<DistDependentQuery>(&query)) {
    return LfDependent(q->f, q->px, ch).value;
  }
  const auto& q = std::get<DistIndependentQuery>(query);
  return LfIndependent(q.f, ch, q.support.value_or(full), options).value;
}

std::string DescribeQuery(const LeakageQuery& query) {
  if (const auto* q = std::get_if<MaxAlphaQuery>(&query)) {
    if (std::isinf(q->alpha)) return "maximal-alpha-leakage(alpha=inf)";
    char alpha[32];
    std::snprintf(alpha, sizeof(alpha), "%.12g", q->alpha);
    return "maximal-alpha-leakage(alpha=" + std::string(alpha) + ")";
  }
  if (const auto* q = std::get_if<DistDependentQuery>(&query)) {
    return "f-leakage-dependent(" + q->f.name() + ")";
  }
  return "f-leakage-independent(" +
         std::get<DistIndependentQuery>(query).f.name() + ")";
}

}  // namespace hdput
