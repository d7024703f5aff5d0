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


// Optimal privacy-utility tradeoffs under a hard distortion constraint and
// the mechanisms that achieve them. Every optimal mechanism here has the
// form ch(y|x) = Q(y) 1[y in B(x)] / Q(B(x)) for a target output
// distribution Q; the solvers differ only in how Q is chosen.

#ifndef HDPUT_PUTSOLVER_H_
#define HDPUT_PUTSOLVER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdput/core.h"
#include "hdput/divergence.h"
#include "hdput/leakage.h"

namespace hdput {

// The maximin covering value q* = max_Q min_x Q(B(x)), i.e. the value of the
// zero-sum game with payoff 1[y in B(x)].
struct QStarSolution {
  double q_star = 0.0;
  ProbVector q_y = ProbVector::Uniform(1);
  // Dual distribution over inputs: max_y sum_x r(x) 1[y in B(x)] bounds q*
  // from above.
  ProbVector certificate = ProbVector::Uniform(1);
  // Dual bound minus primal value.
  double gap = 0.0;
  int pivots = 0;
};

// Throws Error(kEmptyBall) if some input has no feasible output.
QStarSolution SolveQStar(const BallStructure& balls);

struct PutDiagnostics {
  int iterations = 0;
  double gap = 0.0;
  bool converged = true;
  std::string note;
};

struct PutSolution {
  // Optimal leakage in nats; may be +inf.
  double value = 0.0;
  ProbVector q_y = ProbVector::Uniform(1);
  Channel mechanism = Channel::Identity(1);
  LeakageQuery measure;
  // Present for the measures whose optimum is driven by q*.
  std::optional<QStarSolution> q_star;
  PutDiagnostics diagnostics;
};

struct PutOptions {
  // Frank-Wolfe duality-gap stop for the prior-dependent problems.
  double gap_tolerance = 1e-8;
};

// ch(y|x) = q_y(y) 1[y in B(x)] / q_y(B(x)). Throws Error(kZeroBallMass) if
// some ball carries no mass.
Channel BuildMechanism(const ProbVector& q_y, const BallStructure& balls);

// Maximal alpha-leakage. alpha > 1: value -log q*, identical for every such
// alpha. alpha = 1: inf_Q E_px[-log Q(B(X))], which needs `px`.
PutSolution PutAlpha(double alpha, const BallStructure& balls,
                     const std::optional<ProbVector>& px,
                     const PutOptions& options = {});

// Distribution-dependent f-leakage:
//   f(0) + inf_Q E_px[Q(B(X)) (f(1/Q(B(X))) - f(0))].
// With f(0) = +inf the value is finite only if some Q fills every ball on
// the support of px; otherwise +inf is returned and flagged in the notes.
PutSolution PutFDependent(const FDivergence& f, const BallStructure& balls,
                          const ProbVector& px,
                          const PutOptions& options = {});

// Distribution-independent f-leakage: g(q*) with
// g(q) = q f(1/q) + (1 - q) f(0).
PutSolution PutFIndependent(const FDivergence& f, const BallStructure& balls);

// Dispatches on the query type. Supports in the query are ignored: the
// tradeoff is taken over the full input alphabet.
PutSolution SolvePut(const BallStructure& balls, const LeakageQuery& query,
                     const PutOptions& options = {});

struct SweepRow {
  double budget = 0.0;
  double value = 0.0;
  // "ok", or the error name for rows that could not be solved (e.g.
  // "EmptyBall", with value +inf).
  std::string status;
};

// One tradeoff value per budget; budgets must be ascending.
std::vector<SweepRow> TradeoffSweep(const DistortionSpec& spec,
                                    std::span<const double> budgets,
                                    const LeakageQuery& query,
                                    const PutOptions& options = {});

}  // namespace hdput

#endif  // HDPUT_PUTSOLVER_H_
