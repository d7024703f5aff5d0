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


#ifndef HDPUT_DIVERGENCE_H_
#define HDPUT_DIVERGENCE_H_

#include <functional>
#include <limits>
#include <string>

#include "hdput/core.h"

namespace hdput {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class FDivergenceKind {
  kKullbackLeibler,
  kHellinger,
  kTotalVariation,
  kCustom,
};

// A convex generator f on (0, inf) with f(1) = 0, together with the two
// limits that f-divergence conventions need: f(0+) and lim f(t)/t as
// t -> inf. Values are extended reals (+inf allowed).
class FDivergence {
 public:
  // f(t) = t log t.
  static FDivergence KullbackLeibler();
  // f(t) = (t^alpha - 1) / (alpha - 1); alpha > 0, alpha != 1.
  static FDivergence Hellinger(double alpha);
  // f(t) = |t - 1| / 2.
  static FDivergence TotalVariation();
  // User generator. If `derivative` is empty, central differences are used.
  // Custom generators must be differentiable on (0, inf).
  static FDivergence Custom(std::string name, std::function<double(double)> f,
                            std::function<double(double)> derivative,
                            double at_zero, double slope_at_infinity);

  const std::string& name() const { return name_; }
  FDivergenceKind kind() const { return kind_; }
  // Order of a Hellinger generator; NaN for other kinds.
  double alpha() const { return alpha_; }
  double at_zero() const { return at_zero_; }
  double slope_at_infinity() const { return slope_at_infinity_; }

  double operator()(double t) const;
  // Right derivative at t > 0.
  double Derivative(double t) const;

  // q * f(p / q) with the conventions 0 f(0/0) = 0 and
  // 0 f(p/0) = p * slope_at_infinity().
  double Perspective(double p, double q) const;
  // d/dq [q f(p/q)] for q > 0.
  double PerspectiveDerivative(double p, double q) const;

  // g(q) = q f(1/q) + (1 - q) f(0) on [0, 1]; g(1) = f(1) = 0.
  double G(double q) const;
  // g'(q) = f(1/q) - f'(1/q) / q - f(0) on (0, 1]; the one-sided value from
  // the left at q = 1. Arguments below 1e-12 are evaluated at 1e-12, so the
  // result is finite but large where g'(0+) = -inf.
  double GDerivative(double q) const;

 private:
  FDivergence() = default;

  std::string name_;
  FDivergenceKind kind_ = FDivergenceKind::kCustom;
  double alpha_ = std::numeric_limits<double>::quiet_NaN();
  std::function<double(double)> f_;
  std::function<double(double)> derivative_;
  double at_zero_ = 0.0;
  double slope_at_infinity_ = 0.0;
};

// Sum_y q(y) f(p(y) / q(y)). Throws Error(kAlphabetMismatch).
double FDivergenceValue(const FDivergence& f, const ProbVector& p,
                        const ProbVector& q);

double KlDivergence(const ProbVector& p, const ProbVector& q);

// I(X;Y) in nats for X ~ px and Y|X ~ ch.
double MutualInformation(const ProbVector& px, const Channel& ch);

// Renyi divergence of order alpha in [1, inf] between the joint px * ch and
// the product px x qy. alpha = 1 and alpha = inf are the continuous
// extensions (KL and log of the maximal likelihood ratio).
double RenyiDivergence(double alpha, const ProbVector& px, const Channel& ch,
                       const ProbVector& qy);

// Sibson mutual information of order alpha in (1, inf]:
//   alpha / (alpha - 1) * log sum_y (sum_x px(x) ch(y|x)^alpha)^(1/alpha),
// and log sum_y max_{x in supp(px)} ch(y|x) at alpha = inf. This is the
// minimum over qy of RenyiDivergence(alpha, px, ch, qy).
double SibsonMutualInformation(double alpha, const ProbVector& px,
                               const Channel& ch);

// The minimizing output distribution of the Renyi divergence above:
// qy(y) proportional to (sum_x px(x) ch(y|x)^alpha)^(1/alpha).
ProbVector SibsonOptimalOutput(double alpha, const ProbVector& px,
                               const Channel& ch);

}  // namespace hdput

#endif  // HDPUT_DIVERGENCE_H_
