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


// Brute-force checks that share no code with the solvers: exhaustive grid
// search over the simplex, enumeration of deterministic mechanisms and a
// weak-duality sandwich for the covering game. Ball membership is
// recomputed here from raw distortion matrices.

#ifndef HDPUT_ORACLE_H_
#define HDPUT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdput/core.h"

namespace hdput {

inline constexpr std::uint64_t kGridBudget = 10'000'000;
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

struct GridSpec {
  int resolution = 200;
  int dimension = 2;
};

// C(resolution + dimension - 1, dimension - 1), saturating at UINT64_MAX.
std::uint64_t GridPointCount(const GridSpec& grid);

// k = 200 for dimension <= 3, k = 50 above.
int DefaultResolution(int dimension);

struct GridMinimum {
  std::vector<double> point;
  double value = 0.0;
  std::uint64_t evaluated = 0;
};

using SimplexFunction = std::function<double(std::span<const double>)>;

// Exact minimum over {q : q_i = c_i / k, sum c_i = k}. Points are visited in
// lexicographic order of (c_0, ..., c_{d-1}); the first minimizer wins ties.
// Throws Error(kBudgetExceeded) when the grid has more than `budget` points.
GridMinimum GridMinimizeOverSimplex(const SimplexFunction& objective,
                                    const GridSpec& grid,
                                    std::uint64_t budget = kGridBudget);

struct CertificateReport {
  double primal = 0.0;  // min_x q(B(x))
  double dual = 0.0;    // max_y sum_x r(x) 1[y in B(x)]
  bool primal_ok = false;
  bool dual_ok = false;
  bool pass() const { return primal_ok && dual_ok; }
};

CertificateReport CertifyGameValue(const BallStructure& balls,
                                   std::span<const double> q,
                                   std::span<const double> r, double claimed,
                                   double tol = 1e-8);

// Minimum over feasible deterministic maps x -> y in B(x) of the maximal
// leakage log |image|. Throws kBudgetExceeded when prod_x |B(x)| > budget
// and kEmptyBall when some ball is empty.
double EnumerateDeterministicMechanisms(
    const BallStructure& balls, std::uint64_t budget = kEnumerationBudget);

// 1[d(x, y) <= budget] computed directly from the matrix.
std::vector<std::vector<bool>> OracleMembership(
    const std::vector<std::vector<double>>& distortion, double budget);

// log sum_y max_x ch(y|x) over all inputs.
double OracleMaximalLeakage(const std::vector<std::vector<double>>& channel);

struct VerificationRecord {
  std::string instance;
  std::string check;
  double claimed = 0.0;
  double oracle = 0.0;
  // Allowed discrepancy, recorded so the report is self-describing.
  double tolerance = 0.0;
  bool pass = false;
};

// One JSON object, no trailing newline. Infinite values are written as the
// string "inf".
std::string ToJsonLine(const VerificationRecord& record);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int random_instances = 20;
  // Types instances (n, m) with n <= this are cross-checked.
  int types_max_n = 12;
};

// Checks one instance: covering LP against the grid and the certificate,
// deterministic enumeration, alpha-invariance and, with a prior, the
// alpha = 1 value against the grid.
std::vector<VerificationRecord> VerifyInstance(
    const std::string& name, const DistortionSpec& spec,
    const std::optional<ProbVector>& px);

// Seeded random instances plus the types model.
std::vector<VerificationRecord> VerifySuite(const VerifyOptions& options);

}  // namespace hdput

#endif  // HDPUT_ORACLE_H_
