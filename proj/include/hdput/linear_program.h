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


// Dense two-phase tableau simplex with Bland's anti-cycling rule, sized for
// the small programs in this library (tens of rows and columns).

#ifndef HDPUT_LINEAR_PROGRAM_H_
#define HDPUT_LINEAR_PROGRAM_H_

#include <vector>

namespace hdput {

enum class ConstraintSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<double> coefficients;
  ConstraintSense sense = ConstraintSense::kLessEqual;
  double rhs = 0.0;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double value = 0.0;
  // Shadow prices d(value)/d(rhs_i), one per constraint.
  std::vector<double> duals;
  int pivots = 0;
};

LpSolution SolveLinearProgram(const LinearProgram& lp, int max_pivots = 100000);

}  // namespace hdput

#endif  // HDPUT_LINEAR_PROGRAM_H_
