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


#include "hdput/linear_program.h"

#include <cmath>
#include <cstddef>
#include <string>

#include "hdput/errors.h"

namespace hdput {
namespace {

constexpr double kPivotEps = 1e-11;

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : n_(lp.objective.size()) {
    const std::size_t m = lp.constraints.size();
    // Column layout: originals, then one slack/surplus per inequality, then
    // one artificial per >= or = row.
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    sign_.assign(m, 1.0);
    std::vector<ConstraintSense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
      const LinearConstraint& c = lp.constraints[i];
      if (c.coefficients.size() != n_) {
        throw Error(ErrorCode::kAlphabetMismatch,
                    "constraint " + std::to_string(i) +
                        " has the wrong number of coefficients",
                    i);
      }
      sense[i] = c.sense;
      if (c.rhs < 0.0) {
        sign_[i] = -1.0;
        if (c.sense == ConstraintSense::kLessEqual) {
          sense[i] = ConstraintSense::kGreaterEqual;
        } else if (c.sense == ConstraintSense::kGreaterEqual) {
          sense[i] = ConstraintSense::kLessEqual;
        }
      }
      if (sense[i] != ConstraintSense::kEqual) ++slack_count;
      if (sense[i] != ConstraintSense::kLessEqual) ++artificial_count;
    }
    first_artificial_ = n_ + slack_count;
    cols_ = first_artificial_ + artificial_count;
    rows_.assign(m, std::vector<double>(cols_ + 1, 0.0));
    basis_.assign(m, 0);
    unit_column_.assign(m, 0);
    std::size_t next_slack = n_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const LinearConstraint& c = lp.constraints[i];
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = sign_[i] * c.coefficients[j];
      }
      rows_[i][cols_] = sign_[i] * c.rhs;
      switch (sense[i]) {
        case ConstraintSense::kLessEqual:
          rows_[i][next_slack] = 1.0;
          unit_column_[i] = next_slack++;
          break;
        case ConstraintSense::kGreaterEqual:
          rows_[i][next_slack++] = -1.0;
          rows_[i][next_artificial] = 1.0;
          unit_column_[i] = next_artificial++;
          break;
        case ConstraintSense::kEqual:
          rows_[i][next_artificial] = 1.0;
          unit_column_[i] = next_artificial++;
          break;
      }
      basis_[i] = unit_column_[i];
    }
  }

  LpSolution Solve(const LinearProgram& lp, int max_pivots) {
    LpSolution solution;
    // Phase 1: maximize -sum(artificials).
    if (first_artificial_ < cols_) {
      std::vector<double> phase1(cols_, 0.0);
      for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j] = -1.0;
      const LpStatus status = Optimize(phase1, cols_, max_pivots);
      if (status == LpStatus::kPivotLimit) {
        solution.status = status;
        solution.pivots = pivots_;
        return solution;
      }
      double infeasibility = 0.0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (basis_[i] >= first_artificial_) infeasibility += rows_[i][cols_];
      }
      if (infeasibility > 1e-9) {
        solution.status = LpStatus::kInfeasible;
        solution.pivots = pivots_;
        return solution;
      }
      DriveOutArtificials();
    }
    std::vector<double> cost(cols_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = lp.objective[j];
    const LpStatus status = Optimize(cost, first_artificial_, max_pivots);
    solution.status = status;
    solution.pivots = pivots_;
    if (status != LpStatus::kOptimal) return solution;

    solution.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) solution.x[basis_[i]] = rows_[i][cols_];
    }
    solution.value = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      solution.value += lp.objective[j] * solution.x[j];
    }
    // y = c_B^T B^{-1}; column unit_column_[i] of the tableau holds
    // B^{-1} e_i.
    solution.duals.assign(rows_.size(), 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      double y = 0.0;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        y += cost[basis_[k]] * rows_[k][unit_column_[i]];
      }
      solution.duals[i] = sign_[i] * y;
    }
    return solution;
  }

 private:
  // Primal simplex on columns [0, entering_limit) with Bland's rule.
  LpStatus Optimize(const std::vector<double>& cost, std::size_t entering_limit,
                    int max_pivots) {
    while (true) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < entering_limit; ++j) {
        if (IsBasic(j)) continue;
        double reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced > kPivotEps) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return LpStatus::kOptimal;
      std::size_t leaving = rows_.size();
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const double a = rows_[i][entering];
        if (a <= kPivotEps) continue;
        const double ratio = rows_[i][cols_] / a;
        if (leaving == rows_.size() || ratio < best_ratio - 1e-14 ||
            (ratio <= best_ratio + 1e-14 && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) return LpStatus::kUnbounded;
      if (pivots_ >= max_pivots) return LpStatus::kPivotLimit;
      Pivot(leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!IsBasic(j) && std::abs(rows_[i][j]) > 1e-9) {
          Pivot(i, j);
          break;
        }
      }
      // A row with no usable column is redundant; its artificial stays basic
      // at zero and never re-enters.
    }
  }

  bool IsBasic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void Pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    std::vector<double>& pivot_row = rows_[r];
    const double inv = 1.0 / pivot_row[c];
    for (double& v : pivot_row) v *= inv;
    pivot_row[c] = 1.0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const double factor = rows_[i][c];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        rows_[i][j] -= factor * pivot_row[j];
      }
      rows_[i][c] = 0.0;
      if (rows_[i][cols_] < 0.0 && rows_[i][cols_] > -1e-13) {
        rows_[i][cols_] = 0.0;
      }
    }
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_column_;
  std::vector<double> sign_;
  int pivots_ = 0;
};

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp, int max_pivots) {
  Tableau tableau(lp);
  return tableau.Solve(lp, max_pivots);
}

}  // namespace hdput
