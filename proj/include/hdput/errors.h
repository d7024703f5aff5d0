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

#ifndef HDPUT_ERRORS_H_
#define HDPUT_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hdput {

enum class ErrorCode {
  kNotADistribution,
  kAlphabetMismatch,
  kInvalidAlpha,
  kMissingPrior,
  kEmptySupport,
  kEmptyBall,
  kZeroBallMass,
  kDomainError,
  kLengthMismatch,
  kBudgetExceeded,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. `symbol()` carries
// the offending alphabet index when the failure is tied to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> symbol = std::nullopt)
      : std::runtime_error(message), code_(code), symbol_(symbol) {}

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> symbol() const { return symbol_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> symbol_;
};

}  // namespace hdput

#endif  // HDPUT_ERRORS_H_
