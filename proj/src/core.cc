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


#include "hdput/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hdput {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotADistribution:
      return "NotADistribution";
    case ErrorCode::kAlphabetMismatch:
      return "AlphabetMismatch";
    case ErrorCode::kInvalidAlpha:
      return "InvalidAlpha";
    case ErrorCode::kMissingPrior:
      return "MissingPrior";
    case ErrorCode::kEmptySupport:
      return "EmptySupport";
    case ErrorCode::kEmptyBall:
      return "EmptyBall";
    case ErrorCode::kZeroBallMass:
      return "ZeroBallMass";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

ProbVector ProbVector::FromRaw(std::vector<double> raw, double tol) {
  if (raw.empty()) {
    throw Error(ErrorCode::kNotADistribution, "empty probability vector");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i]) || raw[i] < 0.0) {
      throw Error(ErrorCode::kNotADistribution,
                  "entry " + std::to_string(i) + " is negative or not finite",
                  i);
    }
  }
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (std::abs(sum - 1.0) > tol) {
    throw Error(ErrorCode::kNotADistribution,
                "entries sum to " + std::to_string(sum) + ", not 1");
  }
  if (sum != 1.0) {
    for (double& p : raw) p /= sum;
  }
  return ProbVector(std::move(raw));
}

ProbVector ProbVector::Uniform(std::size_t size) {
  if (size == 0) {
    throw Error(ErrorCode::kNotADistribution, "empty probability vector");
  }
  return ProbVector(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

ProbVector ProbVector::PointMass(std::size_t size, std::size_t index) {
  if (index >= size) {
    throw Error(ErrorCode::kInvalidArgument, "point mass index out of range",
                index);
  }
  std::vector<double> probs(size, 0.0);
  probs[index] = 1.0;
  return ProbVector(std::move(probs));
}

ProbVector ProbVector::UniformOn(std::size_t size,
                                 std::span<const std::size_t> support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "uniform over an empty support");
  }
  std::vector<double> probs(size, 0.0);
  const double mass = 1.0 / static_cast<double>(support.size());
  for (std::size_t i : support) {
    if (i >= size) {
      throw Error(ErrorCode::kInvalidArgument, "support index out of range", i);
    }
    probs[i] = mass;
  }
  return ProbVector(std::move(probs));
}

std::vector<std::size_t> ProbVector::Support() const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > 0.0) support.push_back(i);
  }
  return support;
}

Channel Channel::FromRows(const std::vector<std::vector<double>>& rows,
                          double tol) {
  if (rows.empty() || rows[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument, "channel must be non-empty");
  }
  const std::size_t outputs = rows[0].size();
  std::vector<double> entries;
  entries.reserve(rows.size() * outputs);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != outputs) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "channel row " + std::to_string(x) + " has wrong length", x);
    }
    try {
      ProbVector row = ProbVector::FromRaw(rows[x], tol);
      entries.insert(entries.end(), row.values().begin(), row.values().end());
    } catch (const Error& e) {
      throw Error(ErrorCode::kNotADistribution,
                  "channel row " + std::to_string(x) + ": " + e.what(), x);
    }
  }
  return Channel(rows.size(), outputs, std::move(entries));
}

Channel Channel::Identity(std::size_t size) {
  std::vector<double> entries(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) entries[i * size + i] = 1.0;
  return Channel(size, size, std::move(entries));
}

Channel Channel::Constant(std::size_t input_size, const ProbVector& row) {
  std::vector<double> entries;
  entries.reserve(input_size * row.size());
  for (std::size_t x = 0; x < input_size; ++x) {
    entries.insert(entries.end(), row.values().begin(), row.values().end());
  }
  return Channel(input_size, row.size(), std::move(entries));
}

std::vector<std::vector<double>> Channel::Rows() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(input_size_);
  for (std::size_t x = 0; x < input_size_; ++x) {
    auto row = Row(x);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

ProbVector Channel::OutputMarginal(const ProbVector& px) const {
  if (px.size() != input_size_) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "prior size does not match channel input alphabet");
  }
  std::vector<double> q(output_size_, 0.0);
  for (std::size_t x = 0; x < input_size_; ++x) {
    if (px[x] == 0.0) continue;
    for (std::size_t y = 0; y < output_size_; ++y) q[y] += px[x] * (*this)(x, y);
  }
  return ProbVector::FromRaw(std::move(q), 1e-9);
}

DistortionSpec::DistortionSpec(std::vector<std::vector<double>> distortion,
                               double budget)
    : d_(std::move(distortion)), budget_(budget) {
  if (d_.empty() || d_[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "distortion matrix must be non-empty");
  }
  if (!(budget_ >= 0.0) || std::isnan(budget_)) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be nonnegative");
  }
  for (std::size_t x = 0; x < d_.size(); ++x) {
    if (d_[x].size() != d_[0].size()) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "distortion row " + std::to_string(x) + " has wrong length",
                  x);
    }
    for (double v : d_[x]) {
      if (!(v >= 0.0) || std::isnan(v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "distortion row " + std::to_string(x) +
                        " has a negative or NaN entry",
                    x);
      }
    }
  }
}

DistortionSpec DistortionSpec::Hamming(std::size_t k, double budget) {
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 1.0));
  for (std::size_t i = 0; i < k; ++i) d[i][i] = 0.0;
  return DistortionSpec(std::move(d), budget);
}

double DistortionSpec::MaxDistortion() const {
  double best = 0.0;
  for (const auto& row : d_) {
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

DistortionSpec DistortionSpec::WithBudget(double budget) const {
  return DistortionSpec(d_, budget);
}

BallStructure::BallStructure(std::vector<std::vector<std::size_t>> balls,
                             std::size_t output_size)
    : balls_(std::move(balls)),
      output_size_(output_size),
      membership_(balls_.size() * output_size, 0) {
  for (std::size_t x = 0; x < balls_.size(); ++x) {
    auto& ball = balls_[x];
    std::sort(ball.begin(), ball.end());
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
    for (std::size_t y : ball) {
      if (y >= output_size_) {
        throw Error(ErrorCode::kInvalidArgument,
                    "ball of input " + std::to_string(x) +
                        " references an output outside the alphabet",
                    x);
      }
      membership_[x * output_size_ + y] = 1;
    }
  }
}

BallStructure BallStructure::FromBalls(
    std::vector<std::vector<std::size_t>> balls, std::size_t output_size) {
  if (balls.empty() || output_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "ball structure must be non-empty");
  }
  return BallStructure(std::move(balls), output_size);
}

BallStructure BallStructure::FromMembership(
    const std::vector<std::vector<bool>>& membership) {
  if (membership.empty() || membership[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ball structure must be non-empty");
  }
  const std::size_t outputs = membership[0].size();
  std::vector<std::vector<std::size_t>> balls(membership.size());
  for (std::size_t x = 0; x < membership.size(); ++x) {
    if (membership[x].size() != outputs) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "membership row " + std::to_string(x) + " has wrong length",
                  x);
    }
    for (std::size_t y = 0; y < outputs; ++y) {
      if (membership[x][y]) balls[x].push_back(y);
    }
  }
  return BallStructure(std::move(balls), outputs);
}

std::vector<std::vector<bool>> BallStructure::Membership() const {
  std::vector<std::vector<bool>> out(input_size(),
                                     std::vector<bool>(output_size_, false));
  for (std::size_t x = 0; x < input_size(); ++x) {
    for (std::size_t y : balls_[x]) out[x][y] = true;
  }
  return out;
}

std::vector<std::size_t> BallStructure::EmptyBalls() const {
  std::vector<std::size_t> empty;
  for (std::size_t x = 0; x < balls_.size(); ++x) {
    if (balls_[x].empty()) empty.push_back(x);
  }
  return empty;
}

void BallStructure::RequireNonemptyBalls() const {
  for (std::size_t x = 0; x < balls_.size(); ++x) {
    if (balls_[x].empty()) {
      throw Error(ErrorCode::kEmptyBall,
                  "input symbol " + std::to_string(x) +
                      " has an empty feasibility ball; no mechanism satisfies "
                      "the distortion budget",
                  x);
    }
  }
}

double BallStructure::Mass(std::span<const double> q, std::size_t x) const {
  double mass = 0.0;
  for (std::size_t y : balls_[x]) mass += q[y];
  return mass;
}

BallStructure ComputeBalls(const DistortionSpec& spec) {
  std::vector<std::vector<std::size_t>> balls(spec.input_size());
  for (std::size_t x = 0; x < spec.input_size(); ++x) {
    for (std::size_t y = 0; y < spec.output_size(); ++y) {
      if (spec.distortion(x, y) <= spec.budget()) balls[x].push_back(y);
    }
  }
  return BallStructure::FromBalls(std::move(balls), spec.output_size());
}

}  // namespace hdput
