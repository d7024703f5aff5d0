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


#include "hdput/putsolver.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "hdput/frank_wolfe.h"
#include "hdput/linear_program.h"

namespace hdput {
namespace {

ProbVector Normalized(std::vector<double> v) {
  double sum = 0.0;
  for (double& t : v) {
    t = std::max(t, 0.0);
    sum += t;
  }
  for (double& t : v) t /= sum;
  return ProbVector::FromRaw(std::move(v), 1e-9);
}

void RequirePrior(const ProbVector& px, const BallStructure& balls) {
  if (px.size() != balls.input_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "prior has " + std::to_string(px.size()) +
                    " symbols but the distortion has " +
                    std::to_string(balls.input_size()) + " inputs");
  }
}

// Uniform over the union of the balls of inputs with positive prior.
std::vector<double> UnionStart(const ProbVector& px, const BallStructure& balls) {
  std::vector<bool> in_union(balls.output_size(), false);
  for (std::size_t x = 0; x < balls.input_size(); ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y : balls.Ball(x)) in_union[y] = true;
  }
  const auto count = std::count(in_union.begin(), in_union.end(), true);
  std::vector<double> start(balls.output_size(), 0.0);
  for (std::size_t y = 0; y < start.size(); ++y) {
    if (in_union[y]) start[y] = 1.0 / static_cast<double>(count);
  }
  return start;
}

// Rows Q(y) 1[y in B(x)] / Q(B(x)). A ball with no Q-mass gets the uniform
// row over the ball. That is harmless for zero-prior inputs, and optimal for
// positive-prior inputs whenever g(0) is finite: every row inside the ball
// then has divergence exactly g(0) from Q.
Channel PriorMechanism(const ProbVector& q, const ProbVector& px,
                       const BallStructure& balls, bool finite_at_zero,
                       PutDiagnostics& diag) {
  std::vector<std::vector<double>> rows(
      balls.input_size(), std::vector<double>(balls.output_size(), 0.0));
  for (std::size_t x = 0; x < balls.input_size(); ++x) {
    const double mass = balls.Mass(q.values(), x);
    const auto& ball = balls.Ball(x);
    if (mass > 0.0) {
      for (std::size_t y : ball) rows[x][y] = q[y] / mass;
    } else if (px[x] == 0.0 || finite_at_zero) {
      for (std::size_t y : ball) {
        rows[x][y] = 1.0 / static_cast<double>(ball.size());
      }
      diag.note += "input " + std::to_string(x) +
                   " has zero ball mass; uniform row used. ";
    } else {
      throw Error(ErrorCode::kZeroBallMass,
                  "input symbol " + std::to_string(x) +
                      " has positive prior but zero ball mass",
                  x);
    }
  }
  return Channel::FromRows(rows, 1e-9);
}

// Minimizes sum_x px(x) g(Q(B(x))) over the output simplex.
FrankWolfeResult MinimizeBallObjective(
    const ProbVector& px, const BallStructure& balls,
    const std::function<double(double)>& g,
    const std::function<double(double)>& g_prime, double tolerance) {
  const SimplexObjective objective{
      [&](std::span<const double> q) {
        double total = 0.0;
        for (std::size_t x = 0; x < balls.input_size(); ++x) {
          if (px[x] == 0.0) continue;
          total += px[x] * g(balls.Mass(q, x));
        }
        return total;
      },
      [&](std::span<const double> q, std::span<double> grad) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t x = 0; x < balls.input_size(); ++x) {
          if (px[x] == 0.0) continue;
          const double slope = px[x] * g_prime(balls.Mass(q, x));
          for (std::size_t y : balls.Ball(x)) grad[y] += slope;
        }
      }};
  FrankWolfeOptions fw;
  fw.gap_tolerance = tolerance;
  return MinimizeOverSimplex(objective, UnionStart(px, balls), fw);
}

}  // namespace

QStarSolution SolveQStar(const BallStructure& balls) {
  balls.RequireNonemptyBalls();
  const std::size_t n = balls.input_size();
  const std::size_t m = balls.output_size();
  // Variables Q_0..Q_{m-1}, q. maximize q s.t. Q(B(x)) - q >= 0,
  // sum Q = 1.
  LinearProgram lp;
  lp.objective.assign(m + 1, 0.0);
  lp.objective[m] = 1.0;
  for (std::size_t x = 0; x < n; ++x) {
    LinearConstraint row{std::vector<double>(m + 1, 0.0),
                         ConstraintSense::kGreaterEqual, 0.0};
    for (std::size_t y : balls.Ball(x)) row.coefficients[y] = 1.0;
    row.coefficients[m] = -1.0;
    lp.constraints.push_back(std::move(row));
  }
  LinearConstraint total{std::vector<double>(m + 1, 1.0), ConstraintSense::kEqual,
                         1.0};
  total.coefficients[m] = 0.0;
  lp.constraints.push_back(std::move(total));

  const LpSolution s = SolveLinearProgram(lp);
  if (s.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kDomainError,
                "covering linear program did not reach optimality");
  }
  QStarSolution solution;
  solution.pivots = s.pivots;
  solution.q_y =
      Normalized(std::vector<double>(s.x.begin(), s.x.begin() + static_cast<long>(m)));
  double primal = 1.0;
  for (std::size_t x = 0; x < n; ++x) {
    primal = std::min(primal, balls.Mass(solution.q_y.values(), x));
  }
  if (primal > 1.0 - 1e-12) primal = 1.0;
  solution.q_star = primal;

  std::vector<double> r(n, 0.0);
  double r_mass = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    r[x] = std::max(0.0, -s.duals[x]);
    r_mass += r[x];
  }
  solution.certificate =
      r_mass > 0.0 ? Normalized(std::move(r)) : ProbVector::Uniform(n);
  double dual = 0.0;
  for (std::size_t y = 0; y < m; ++y) {
    double covered = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (balls.Contains(x, y)) covered += solution.certificate[x];
    }
    dual = std::max(dual, covered);
  }
  solution.gap = std::max(0.0, dual - primal);
  return solution;
}

Channel BuildMechanism(const ProbVector& q_y, const BallStructure& balls) {
  if (q_y.size() != balls.output_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "output distribution does not match the ball outputs");
  }
  std::vector<std::vector<double>> rows(
      balls.input_size(), std::vector<double>(balls.output_size(), 0.0));
  for (std::size_t x = 0; x < balls.input_size(); ++x) {
    const double mass = balls.Mass(q_y.values(), x);
    if (!(mass > 0.0)) {
      throw Error(ErrorCode::kZeroBallMass,
                  "input symbol " + std::to_string(x) +
                      " has zero output mass inside its ball",
                  x);
    }
    for (std::size_t y : balls.Ball(x)) rows[x][y] = q_y[y] / mass;
  }
  return Channel::FromRows(rows, 1e-12);
}

PutSolution PutAlpha(double alpha, const BallStructure& balls,
                     const std::optional<ProbVector>& px,
                     const PutOptions& options) {
  if (!(alpha >= 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha, "alpha must lie in [1, inf]");
  }
  if (alpha > 1.0) {
    QStarSolution q = SolveQStar(balls);
    PutSolution solution{-std::log(q.q_star),
                         q.q_y,
                         BuildMechanism(q.q_y, balls),
                         MaxAlphaQuery{alpha, px, std::nullopt},
                         q,
                         PutDiagnostics{q.pivots, q.gap, true, ""}};
    if (solution.value == 0.0) solution.value = 0.0;  // no negative zero
    return solution;
  }
  if (!px) {
    throw Error(ErrorCode::kMissingPrior,
                "the alpha = 1 tradeoff depends on the input prior; none given");
  }
  RequirePrior(*px, balls);
  // A mechanism needs a feasible row for every input, even zero-prior ones.
  balls.RequireNonemptyBalls();
  FrankWolfeResult r = MinimizeBallObjective(
      *px, balls, [](double s) { return s > 0.0 ? -std::log(s) : kInfinity; },
      [](double s) { return s > 0.0 ? -1.0 / s : -kInfinity; },
      options.gap_tolerance);
  PutDiagnostics diag{r.iterations, r.gap, r.converged, ""};
  ProbVector q = Normalized(std::move(r.point));
  Channel mechanism = PriorMechanism(q, *px, balls, false, diag);
  return PutSolution{std::max(r.value, 0.0), std::move(q), std::move(mechanism),
                     MaxAlphaQuery{1.0, px, std::nullopt}, std::nullopt,
                     std::move(diag)};
}

PutSolution PutFDependent(const FDivergence& f, const BallStructure& balls,
                          const ProbVector& px, const PutOptions& options) {
  RequirePrior(px, balls);
  balls.RequireNonemptyBalls();
  const DistDependentQuery measure{f, px};
  if (std::isinf(f.at_zero())) {
    // Finite only when Q fills every ball on the support: Q must live in
    // the intersection of those balls.
    std::vector<std::size_t> common;
    for (std::size_t y = 0; y < balls.output_size(); ++y) {
      bool everywhere = true;
      for (std::size_t x = 0; x < balls.input_size(); ++x) {
        if (px[x] > 0.0 && !balls.Contains(x, y)) everywhere = false;
      }
      if (everywhere) common.push_back(y);
    }
    PutDiagnostics diag;
    if (!common.empty()) {
      ProbVector q = ProbVector::UniformOn(balls.output_size(), common);
      Channel mechanism = PriorMechanism(q, px, balls,
                                         std::isfinite(f.G(0.0)), diag);
      return PutSolution{0.0, q, std::move(mechanism), measure, std::nullopt,
                         std::move(diag)};
    }
    diag.converged = false;
    diag.note = "InfeasibleValue: f(0) is infinite and no output lies in every "
                "ball on the prior support";
    ProbVector q = Normalized(UnionStart(px, balls));
    Channel mechanism =
        PriorMechanism(q, px, balls, std::isfinite(f.G(0.0)), diag);
    return PutSolution{kInfinity, q, std::move(mechanism), measure,
                       std::nullopt, std::move(diag)};
  }
  FrankWolfeResult r = MinimizeBallObjective(
      px, balls, [&f](double s) { return f.G(s); },
      [&f](double s) { return f.GDerivative(s); }, options.gap_tolerance);
  PutDiagnostics diag{r.iterations, r.gap, r.converged, ""};
  ProbVector q = Normalized(std::move(r.point));
  Channel mechanism =
      PriorMechanism(q, px, balls, std::isfinite(f.G(0.0)), diag);
  return PutSolution{std::max(r.value, 0.0), std::move(q), std::move(mechanism),
                     measure, std::nullopt, std::move(diag)};
}

PutSolution PutFIndependent(const FDivergence& f, const BallStructure& balls) {
  QStarSolution q = SolveQStar(balls);
  const double value = f.G(q.q_star);
  return PutSolution{value == 0.0 ? 0.0 : value,
                     q.q_y,
                     BuildMechanism(q.q_y, balls),
                     DistIndependentQuery{f, std::nullopt},
                     q,
                     PutDiagnostics{q.pivots, q.gap, true, ""}};
}

PutSolution SolvePut(const BallStructure& balls, const LeakageQuery& query,
                     const PutOptions& options) {
  if (const auto* q = std::get_if<MaxAlphaQuery>(&query)) {
    return PutAlpha(q->alpha, balls, q->px, options);
  }
  if (const auto* q = std::get_if<DistDependentQuery>(&query)) {
    return PutFDependent(q->f, balls, q->px, options);
  }
  return PutFIndependent(std::get<DistIndependentQuery>(query).f, balls);
}

std::vector<SweepRow> TradeoffSweep(const DistortionSpec& spec,
                                    std::span<const double> budgets,
                                    const LeakageQuery& query,
                                    const PutOptions& options) {
  if (!std::is_sorted(budgets.begin(), budgets.end())) {
    throw Error(ErrorCode::kInvalidArgument,
                "sweep budgets must be sorted ascending");
  }
  std::vector<SweepRow> rows;
  rows.reserve(budgets.size());
  for (double budget : budgets) {
    SweepRow row{budget, kInfinity, "ok"};
    try {
      const BallStructure balls = ComputeBalls(spec.WithBudget(budget));
      row.value = SolvePut(balls, query, options).value;
    } catch (const Error& e) {
      row.status = std::string(ErrorCodeName(e.code()));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hdput
