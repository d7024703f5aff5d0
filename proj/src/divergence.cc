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
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace hdput {
namespace {

void RequireAlphaAtLeastOne(double alpha) {
  if (!(alpha >= 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "alpha must lie in [1, inf], got " + std::to_string(alpha));
  }
}

void RequireSameInputs(const ProbVector& px, const Channel& ch) {
  if (px.size() != ch.input_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "input distribution has " + std::to_string(px.size()) +
                    " symbols but the channel has " +
                    std::to_string(ch.input_size()) + " inputs");
  }
}

// log sum_i exp(v_i), ignoring -inf entries.
double LogSumExp(const std::vector<double>& v) {
  double hi = -kInfinity;
  for (double t : v) hi = std::max(hi, t);
  if (!std::isfinite(hi)) return hi;
  double sum = 0.0;
  for (double t : v) sum += std::exp(t - hi);
  return hi + std::log(sum);
}

}  // namespace

FDivergence FDivergence::KullbackLeibler() {
  FDivergence f;
  f.name_ = "kl";
  f.kind_ = FDivergenceKind::kKullbackLeibler;
  f.f_ = [](double t) { return t * std::log(t); };
  f.derivative_ = [](double t) { return std::log(t) + 1.0; };
  f.at_zero_ = 0.0;
  f.slope_at_infinity_ = kInfinity;
  return f;
}

FDivergence FDivergence::Hellinger(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "Hellinger order must be positive, finite and != 1");
  }
  FDivergence f;
  char order[32];
  std::snprintf(order, sizeof(order), "%.12g", alpha);
  f.name_ = "hellinger:" + std::string(order);
  f.kind_ = FDivergenceKind::kHellinger;
  f.alpha_ = alpha;
  f.f_ = [alpha](double t) {
    return (std::pow(t, alpha) - 1.0) / (alpha - 1.0);
  };
  f.derivative_ = [alpha](double t) {
    return alpha * std::pow(t, alpha - 1.0) / (alpha - 1.0);
  };
  f.at_zero_ = -1.0 / (alpha - 1.0);
  f.slope_at_infinity_ = alpha > 1.0 ? kInfinity : 0.0;
  return f;
}

FDivergence FDivergence::TotalVariation() {
  FDivergence f;
  f.name_ = "tv";
  f.kind_ = FDivergenceKind::kTotalVariation;
  f.f_ = [](double t) { return std::abs(t - 1.0) / 2.0; };
  f.derivative_ = [](double t) { return t >= 1.0 ? 0.5 : -0.5; };
  f.at_zero_ = 0.5;
  f.slope_at_infinity_ = 0.5;
  return f;
}

FDivergence FDivergence::Custom(std::string name,
                                std::function<double(double)> fn,
                                std::function<double(double)> derivative,
                                double at_zero, double slope_at_infinity) {
  if (!fn) {
    throw Error(ErrorCode::kInvalidArgument, "custom generator is empty");
  }
  FDivergence f;
  f.name_ = std::move(name);
  f.kind_ = FDivergenceKind::kCustom;
  if (!derivative) {
    derivative = [fn](double t) {
      const double h = 1e-6 * std::max(1.0, t);
      const double lo = std::max(t - h, 0.5 * t);
      return (fn(t + h) - fn(lo)) / (t + h - lo);
    };
  }
  f.f_ = std::move(fn);
  f.derivative_ = std::move(derivative);
  f.at_zero_ = at_zero;
  f.slope_at_infinity_ = slope_at_infinity;
  return f;
}

double FDivergence::operator()(double t) const {
  if (t == 0.0) return at_zero_;
  if (t == 1.0) return 0.0;
  return f_(t);
}

double FDivergence::Derivative(double t) const { return derivative_(t); }

double FDivergence::Perspective(double p, double q) const {
  if (q == 0.0) {
    if (p == 0.0) return 0.0;
    return std::isinf(slope_at_infinity_) ? slope_at_infinity_
                                          : p * slope_at_infinity_;
  }
  if (p == 0.0) return std::isinf(at_zero_) ? at_zero_ : q * at_zero_;
  return q * (*this)(p / q);
}

double FDivergence::PerspectiveDerivative(double p, double q) const {
  if (p == 0.0) return at_zero_;
  const double t = p / q;
  return (*this)(t) - t * Derivative(t);
}

double FDivergence::G(double q) const {
  if (q >= 1.0) return 0.0;
  if (q <= 0.0) return slope_at_infinity_ + at_zero_;
  if (std::isinf(at_zero_)) return at_zero_;
  return q * (*this)(1.0 / q) + (1.0 - q) * at_zero_;
}

double FDivergence::GDerivative(double q) const {
  // g(q) = 1 - q for total variation.
  if (kind_ == FDivergenceKind::kTotalVariation) return -1.0;
  // Masses at or beyond the ends come from rounding in callers; use the
  // one-sided values just inside [0, 1].
  constexpr double kSmallestMass = 1e-12;
  q = std::clamp(q, kSmallestMass, 1.0);
  const double t = 1.0 / q;
  // f'(t) is taken from the right; at q = 1 the left limit of g' needs
  // f'(1+), which is what Derivative returns.
  return (*this)(t) - Derivative(t) * t - at_zero_;
}

double FDivergenceValue(const FDivergence& f, const ProbVector& p,
                        const ProbVector& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "f-divergence arguments live on different alphabets");
  }
  double total = 0.0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    total += f.Perspective(p[y], q[y]);
  }
  return total;
}

double KlDivergence(const ProbVector& p, const ProbVector& q) {
  return FDivergenceValue(FDivergence::KullbackLeibler(), p, q);
}

double MutualInformation(const ProbVector& px, const Channel& ch) {
  RequireSameInputs(px, ch);
  const ProbVector qy = ch.OutputMarginal(px);
  double total = 0.0;
  for (std::size_t x = 0; x < px.size(); ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y = 0; y < ch.output_size(); ++y) {
      const double w = ch(x, y);
      if (w == 0.0) continue;
      total += px[x] * w * std::log(w / qy[y]);
    }
  }
  return std::max(total, 0.0);
}

double RenyiDivergence(double alpha, const ProbVector& px, const Channel& ch,
                       const ProbVector& qy) {
  RequireAlphaAtLeastOne(alpha);
  RequireSameInputs(px, ch);
  if (qy.size() != ch.output_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "output distribution does not match the channel outputs");
  }
  if (alpha == 1.0) {
    double total = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px[x] == 0.0) continue;
      for (std::size_t y = 0; y < ch.output_size(); ++y) {
        const double w = ch(x, y);
        if (w == 0.0) continue;
        if (qy[y] == 0.0) return kInfinity;
        total += px[x] * w * std::log(w / qy[y]);
      }
    }
    return total;
  }
  if (std::isinf(alpha)) {
    double best = -kInfinity;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px[x] == 0.0) continue;
      for (std::size_t y = 0; y < ch.output_size(); ++y) {
        const double w = ch(x, y);
        if (w == 0.0) continue;
        if (qy[y] == 0.0) return kInfinity;
        best = std::max(best, std::log(w / qy[y]));
      }
    }
    return best;
  }
  std::vector<double> logs;
  for (std::size_t x = 0; x < px.size(); ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y = 0; y < ch.output_size(); ++y) {
      const double w = ch(x, y);
      if (w == 0.0) continue;
      if (qy[y] == 0.0) return kInfinity;
      logs.push_back(std::log(px[x]) + alpha * std::log(w) +
                     (1.0 - alpha) * std::log(qy[y]));
    }
  }
  return LogSumExp(logs) / (alpha - 1.0);
}

namespace {

// Per-output terms s_y with Sibson MI = alpha/(alpha-1) log sum_y s_y, or
// log sum_y s_y at alpha = inf. Scaled by the column maximum so large
// orders do not underflow.
std::vector<double> SibsonTerms(double alpha, const ProbVector& px,
                                const Channel& ch) {
  std::vector<double> terms(ch.output_size(), 0.0);
  for (std::size_t y = 0; y < ch.output_size(); ++y) {
    double peak = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px[x] > 0.0) peak = std::max(peak, ch(x, y));
    }
    if (peak == 0.0) continue;
    if (std::isinf(alpha)) {
      terms[y] = peak;
      continue;
    }
    double inner = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px[x] == 0.0 || ch(x, y) == 0.0) continue;
      inner += px[x] * std::pow(ch(x, y) / peak, alpha);
    }
    terms[y] = peak * std::pow(inner, 1.0 / alpha);
  }
  return terms;
}

}  // namespace

double SibsonMutualInformation(double alpha, const ProbVector& px,
                               const Channel& ch) {
  if (!(alpha > 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "Sibson mutual information needs alpha > 1");
  }
  RequireSameInputs(px, ch);
  const std::vector<double> terms = SibsonTerms(alpha, px, ch);
  double sum = 0.0;
  for (double t : terms) sum += t;
  const double log_sum = std::log(sum);
  if (std::isinf(alpha)) return std::max(log_sum, 0.0);
  return std::max(alpha / (alpha - 1.0) * log_sum, 0.0);
}

ProbVector SibsonOptimalOutput(double alpha, const ProbVector& px,
                               const Channel& ch) {
  if (!(alpha > 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "Sibson mutual information needs alpha > 1");
  }
  RequireSameInputs(px, ch);
  std::vector<double> terms = SibsonTerms(alpha, px, ch);
  double sum = 0.0;
  for (double t : terms) sum += t;
  for (double& t : terms) t /= sum;
  return ProbVector::FromRaw(std::move(terms), 1e-9);
}

}  // namespace hdput
