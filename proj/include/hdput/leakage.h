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


// Leakage measures of a fixed mechanism: maximal alpha-leakage, the
// f-divergence leakages (distribution-dependent and -independent), and the
// alpha-loss they are built from.

#ifndef HDPUT_LEAKAGE_H_
#define HDPUT_LEAKAGE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hdput/core.h"
#include "hdput/divergence.h"

namespace hdput {

// alpha / (alpha - 1) * (1 - p_hat^(1 - 1/alpha)) for 1 < alpha < inf.
double AlphaLoss(double alpha, double p_hat);
// alpha -> 1 limit: -log p_hat.
double LogLoss(double p_hat);
// alpha -> inf limit: 1 - p_hat.
double ZeroOneLoss(double p_hat);

// Controls the numerical supremum over input distributions. Starts are the
// uniform distribution on the support, the best points of a simplex grid of
// `grid_resolution` (coarsened when the grid exceeds `grid_budget` points),
// and `random_starts` Dirichlet(1) draws from `seed`.
struct AscentOptions {
  int grid_resolution = 20;
  int grid_starts = 50;
  int random_starts = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::int64_t grid_budget = 200000;
  int max_iterations = 100000;
};

struct LeakageEstimate {
  double value = 0.0;
  // Maximizing input distribution (over the whole input alphabet, zero off
  // the support). For alpha = 1 this is the prior.
  ProbVector input = ProbVector::Uniform(1);
  double gap = 0.0;
  int starts = 0;
  int iterations = 0;
};

std::vector<std::size_t> FullSupport(std::size_t size);

// Maximal alpha-leakage of `ch`. alpha = 1 is I(X;Y) under `px` (required);
// alpha in (1, inf) is the supremum over input distributions on `support`
// of Sibson MI; alpha = inf is log sum_y max_{x in support} ch(y|x).
LeakageEstimate MaximalAlphaLeakageDetailed(
    double alpha, const Channel& ch, std::span<const std::size_t> support,
    const std::optional<ProbVector>& px, const AscentOptions& options = {});
double MaximalAlphaLeakage(double alpha, const Channel& ch,
                           std::span<const std::size_t> support,
                           const std::optional<ProbVector>& px,
                           const AscentOptions& options = {});

struct DependentLeakage {
  double value = 0.0;
  ProbVector q = ProbVector::Uniform(1);
  double gap = 0.0;
  int iterations = 0;
};

// inf_Q D_f(px ch || px x Q).
DependentLeakage LfDependent(const FDivergence& f, const ProbVector& px,
                             const Channel& ch, double tolerance = 1e-8);

struct IndependentLeakage {
  double value = 0.0;
  ProbVector input = ProbVector::Uniform(1);
  ProbVector q = ProbVector::Uniform(1);
  double gap = 0.0;
  int iterations = 0;
};

// sup_{P on support} inf_Q D_f(P ch || P x Q).
IndependentLeakage LfIndependent(const FDivergence& f, const Channel& ch,
                                 std::span<const std::size_t> support,
                                 const AscentOptions& options = {});

// (1 / (alpha - 1)) log(1 + (alpha - 1) value): maps the Hellinger-based
// independent leakage of order alpha to maximal alpha-leakage.
double Lemma1Bridge(double alpha, double value);

struct MaxAlphaQuery {
  double alpha = 2.0;
  std::optional<ProbVector> px;
  // Absent means the whole input alphabet.
  std::optional<std::vector<std::size_t>> support;
};

struct DistDependentQuery {
  FDivergence f;
  ProbVector px;
};

struct DistIndependentQuery {
  FDivergence f;
  std::optional<std::vector<std::size_t>> support;
};

using LeakageQuery =
    std::variant<MaxAlphaQuery, DistDependentQuery, DistIndependentQuery>;

double EvaluateLeakage(const LeakageQuery& query, const Channel& ch,
                       const AscentOptions& options = {});
std::string DescribeQuery(const LeakageQuery& query);

}  // namespace hdput

#endif  // HDPUT_LEAKAGE_H_
