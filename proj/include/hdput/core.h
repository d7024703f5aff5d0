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

// Finite-alphabet primitives: distributions, channels, distortion matrices
// and the feasibility balls they induce. Symbols are integer indices
// 0..k-1; mapping labels to indices is left to callers.

#ifndef HDPUT_CORE_H_
#define HDPUT_CORE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hdput/errors.h"

namespace hdput {

inline constexpr double kSimplexTolerance = 1e-12;

// A probability distribution over {0, ..., size()-1}. Immutable.
class ProbVector {
 public:
  // Validates `raw` against the simplex. Entries must be nonnegative and
  // sum to 1 within `tol`; a sum that is off by less than `tol` is
  // normalized away. Throws Error(kNotADistribution).
  static ProbVector FromRaw(std::vector<double> raw,
                            double tol = kSimplexTolerance);
  static ProbVector Uniform(std::size_t size);
  static ProbVector PointMass(std::size_t size, std::size_t index);
  // Uniform over `support`, zero elsewhere. `support` must be nonempty.
  static ProbVector UniformOn(std::size_t size,
                              std::span<const std::size_t> support);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const { return probs_; }
  std::vector<std::size_t> Support() const;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

// Row-stochastic conditional distribution P(y|x), rows indexed by x.
class Channel {
 public:
  static Channel FromRows(const std::vector<std::vector<double>>& rows,
                          double tol = kSimplexTolerance);
  static Channel Identity(std::size_t size);
  // Every row equal to `row`: the output is independent of the input.
  static Channel Constant(std::size_t input_size, const ProbVector& row);

  std::size_t input_size() const { return input_size_; }
  std::size_t output_size() const { return output_size_; }
  double operator()(std::size_t x, std::size_t y) const {
    return entries_[x * output_size_ + y];
  }
  std::span<const double> Row(std::size_t x) const {
    return std::span<const double>(entries_).subspan(x * output_size_,
                                                     output_size_);
  }
  std::vector<std::vector<double>> Rows() const;
  // Output marginal under input distribution `px`.
  ProbVector OutputMarginal(const ProbVector& px) const;

  friend bool operator==(const Channel&, const Channel&) = default;

 private:
  Channel(std::size_t input_size, std::size_t output_size,
          std::vector<double> entries)
      : input_size_(input_size),
        output_size_(output_size),
        entries_(std::move(entries)) {}

  std::size_t input_size_ = 0;
  std::size_t output_size_ = 0;
  std::vector<double> entries_;
};

// Distortion matrix d(x, y) >= 0 with budget D >= 0. The matrix may be
// rectangular.
class DistortionSpec {
 public:
  DistortionSpec(std::vector<std::vector<double>> distortion, double budget);

  // 0/1 distortion on a k-symbol alphabet.
  static DistortionSpec Hamming(std::size_t k, double budget);

  std::size_t input_size() const { return d_.size(); }
  std::size_t output_size() const { return d_.empty() ? 0 : d_[0].size(); }
  double distortion(std::size_t x, std::size_t y) const { return d_[x][y]; }
  const std::vector<std::vector<double>>& matrix() const { return d_; }
  double budget() const { return budget_; }
  double MaxDistortion() const;
  DistortionSpec WithBudget(double budget) const;

 private:
  std::vector<std::vector<double>> d_;
  double budget_;
};

// Feasibility sets B_D(x) = {y : d(x, y) <= D} and their 0/1 membership
// matrix.
class BallStructure {
 public:
  // Builds from explicit ball lists; indices must be < output_size.
  static BallStructure FromBalls(std::vector<std::vector<std::size_t>> balls,
                                 std::size_t output_size);
  static BallStructure FromMembership(
      const std::vector<std::vector<bool>>& membership);

  std::size_t input_size() const { return balls_.size(); }
  std::size_t output_size() const { return output_size_; }
  const std::vector<std::size_t>& Ball(std::size_t x) const {
    return balls_[x];
  }
  bool Contains(std::size_t x, std::size_t y) const {
    return membership_[x * output_size_ + y] != 0;
  }
  std::vector<std::vector<bool>> Membership() const;
  // Inputs whose ball is empty. The structure itself stays valid; solvers
  // reject it.
  std::vector<std::size_t> EmptyBalls() const;
  // Throws Error(kEmptyBall) naming the first input with an empty ball.
  void RequireNonemptyBalls() const;
  // q(B(x)).
  double Mass(std::span<const double> q, std::size_t x) const;

 private:
  BallStructure(std::vector<std::vector<std::size_t>> balls,
                std::size_t output_size);

  std::vector<std::vector<std::size_t>> balls_;
  std::size_t output_size_;
  std::vector<unsigned char> membership_;
};

BallStructure ComputeBalls(const DistortionSpec& spec);

}  // namespace hdput

#endif  // HDPUT_CORE_H_
