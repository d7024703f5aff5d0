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


// File formats: the problem-spec JSON read by the command line tool and the
// result artifacts it writes.

#ifndef HDPUT_IO_H_
#define HDPUT_IO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hdput/core.h"
#include "hdput/divergence.h"
#include "hdput/putsolver.h"
#include "hdput/typesmodel.h"

namespace hdput {

struct Problem {
  DistortionSpec spec;
  std::optional<ProbVector> px;
};

// {"px": [...] (optional), "distortion": [[...]], "budget": D}. Throws
// Error(kInvalidArgument) on malformed input.
Problem ParseProblem(std::string_view text);
Problem LoadProblem(const std::string& path);

// A bare JSON array or an object with a "px" array.
ProbVector ParsePrior(std::string_view text);

std::string ReadFile(const std::string& path);

// "inf" (any case) or a real >= 1.
double ParseAlpha(std::string_view text);
// "kl", "tv" or "hellinger:<alpha>".
FDivergence ParseFDivergence(std::string_view text);

// 12 significant digits, '.' separator; infinities as "inf"/"-inf".
std::string FormatNumber(double v);

std::string PutSolutionJson(const PutSolution& solution);
// One row per input, no header.
std::string MechanismCsv(const Channel& mechanism);
std::string SweepCsv(std::span<const SweepRow> rows);

// Optional result of the alpha = 1 problem on the type alphabet, which has
// no closed form and is reported separately.
struct TypesAlphaOne {
  std::string prior;
  double value = 0.0;
};

std::string TypesJson(const TypeMechanism& mechanism,
                      const std::optional<TypesAlphaOne>& alpha_one = {});

}  // namespace hdput

#endif  // HDPUT_IO_H_
