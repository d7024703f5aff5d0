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


#include "hdput/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "hdput/putsolver.h"
#include "hdput/typesmodel.h"

namespace hdput {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double MinBallMass(const std::vector<std::vector<bool>>& member,
                   std::span<const double> q) {
  double worst = kInf;
  for (const auto& row : member) {
    double mass = 0.0;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (row[y]) mass += q[y];
    }
    worst = std::min(worst, mass);
  }
  return worst;
}

std::vector<std::vector<bool>> MembershipOf(const BallStructure& balls) {
  std::vector<std::vector<bool>> member(
      balls.input_size(), std::vector<bool>(balls.output_size(), false));
  for (std::size_t x = 0; x < balls.input_size(); ++x) {
    for (std::size_t y = 0; y < balls.output_size(); ++y) {
      member[x][y] = balls.Contains(x, y);
    }
  }
  return member;
}

VerificationRecord Record(const std::string& instance, std::string check,
                          double claimed, double oracle, double tolerance,
                          bool pass) {
  return {instance, std::move(check), claimed, oracle, tolerance, pass};
}

nlohmann::json Number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

// Random distortion matrix with entries in {0..3} and every ball nonempty.
DistortionSpec RandomSpec(std::mt19937_64& rng, std::size_t inputs,
                          std::size_t outputs) {
  std::uniform_int_distribution<int> entry(0, 3);
  std::uniform_int_distribution<int> budget(0, 2);
  while (true) {
    std::vector<std::vector<double>> d(inputs, std::vector<double>(outputs));
    for (auto& row : d) {
      for (double& v : row) v = entry(rng);
    }
    const double b = budget(rng);
    bool ok = true;
    for (const auto& row : d) {
      ok = ok && std::any_of(row.begin(), row.end(),
                             [b](double v) { return v <= b; });
    }
    if (ok) return DistortionSpec(std::move(d), b);
  }
}

ProbVector RandomPrior(std::mt19937_64& rng, std::size_t size) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> raw(size);
  double total = 0.0;
  for (double& v : raw) total += (v = gamma(rng));
  for (double& v : raw) v /= total;
  return ProbVector::FromRaw(std::move(raw), 1e-9);
}

void AppendTypesChecks(const TypesInstance& inst, bool with_solver,
                       std::vector<VerificationRecord>& out) {
  const std::string name =
      "types-" + std::to_string(inst.n) + "-" + std::to_string(inst.m);
  const TypeMechanism mech = BuildTypeMechanism(inst);
  const int size = inst.n + 1;

  // Partition: every type lies in exactly one ball around an index.
  int covered_once = 0;
  for (int i = 0; i < size; ++i) {
    int hits = 0;
    for (int j : mech.index_set) {
      if (j >= 0 && j <= inst.n && std::abs(i - j) <= inst.m) ++hits;
    }
    covered_once += hits == 1;
  }
  out.push_back(Record(name, "types_partition", size, covered_once, 0.0,
                       covered_once == size));
  if (!with_solver) return;

  const DistortionSpec spec = TypesAsGenericInstance(inst);
  const auto member = OracleMembership(spec.matrix(), spec.budget());
  const double closed = PutTypesClosedForm(inst);
  const auto count = static_cast<double>(mech.index_set.size());

  // Primal: uniform on the index set. Dual: uniform on the spread inputs
  // 0, 2m+1, 2(2m+1), ..., whose balls are disjoint.
  std::vector<double> q(size, 0.0);
  for (int j : mech.index_set) q[j] = 1.0 / count;
  const double primal = MinBallMass(member, q);
  double dual = 0.0;
  for (int y = 0; y < size; ++y) {
    double mass = 0.0;
    for (int k = 0; k < static_cast<int>(count); ++k) {
      const int x = k * (2 * inst.m + 1);
      if (x <= inst.n && member[x][y]) mass += 1.0 / count;
    }
    dual = std::max(dual, mass);
  }
  const double oracle = -std::log(primal);
  out.push_back(Record(name, "types_closed_form_sandwich", closed, oracle,
                       1e-12,
                       std::abs(primal - dual) <= 1e-12 &&
                           std::abs(closed - oracle) <= 1e-12));

  const QStarSolution lp = SolveQStar(ComputeBalls(spec));
  out.push_back(Record(name, "types_closed_form_vs_lp", closed,
                       -std::log(lp.q_star), 1e-8,
                       std::abs(closed + std::log(lp.q_star)) <= 1e-8));
  out.push_back(Record(name, "types_mechanism_maxl", closed,
                       OracleMaximalLeakage(mech.TypeChannel().Rows()), 1e-12,
                       std::abs(closed - OracleMaximalLeakage(
                                             mech.TypeChannel().Rows())) <=
                           1e-12));
}

}  // namespace

std::uint64_t GridPointCount(const GridSpec& grid) {
  if (grid.resolution < 1 || grid.dimension < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid needs resolution >= 1 and dimension >= 1");
  }
  // C(k + d - 1, d - 1) built incrementally; each partial product is itself
  // a binomial coefficient, so the division is exact.
  const std::uint64_t k = static_cast<std::uint64_t>(grid.resolution);
  std::uint64_t count = 1;
  for (std::uint64_t i = 1; i < static_cast<std::uint64_t>(grid.dimension);
       ++i) {
    const std::uint64_t num = k + i;
    if (count > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count = count * num / i;
  }
  return count;
}

int DefaultResolution(int dimension) { return dimension <= 3 ? 200 : 50; }

GridMinimum GridMinimizeOverSimplex(const SimplexFunction& objective,
                                    const GridSpec& grid,
                                    std::uint64_t budget) {
  const std::uint64_t total = GridPointCount(grid);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "simplex grid has " + std::to_string(total) +
                    " points, budget is " + std::to_string(budget));
  }
  const int d = grid.dimension;
  const int k = grid.resolution;
  // Lexicographic walk of compositions of k into d parts, starting from
  // (0, ..., 0, k).
  std::vector<int> counts(d, 0);
  counts[d - 1] = k;
  std::vector<double> point(d);
  GridMinimum best;
  best.value = kInf;
  while (true) {
    for (int i = 0; i < d; ++i) {
      point[i] = static_cast<double>(counts[i]) / k;
    }
    const double value = objective(point);
    ++best.evaluated;
    if (best.point.empty() || value < best.value) {
      best.value = value;
      best.point = point;
    }
    // Next composition: move one unit from the last nonzero part j into
    // part j - 1 and push the remainder of part j to the end.
    int j = d - 1;
    while (j > 0 && counts[j] == 0) --j;
    if (j == 0) break;
    const int rest = counts[j] - 1;
    counts[j] = 0;
    ++counts[j - 1];
    counts[d - 1] = rest;
  }
  return best;
}

CertificateReport CertifyGameValue(const BallStructure& balls,
                                   std::span<const double> q,
                                   std::span<const double> r, double claimed,
                                   double tol) {
  if (q.size() != balls.output_size() || r.size() != balls.input_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "certificate vectors do not match the ball structure");
  }
  const auto member = MembershipOf(balls);
  CertificateReport report;
  report.primal = MinBallMass(member, q);
  report.dual = 0.0;
  for (std::size_t y = 0; y < balls.output_size(); ++y) {
    double mass = 0.0;
    for (std::size_t x = 0; x < balls.input_size(); ++x) {
      if (member[x][y]) mass += r[x];
    }
    report.dual = std::max(report.dual, mass);
  }
  report.primal_ok = report.primal >= claimed - tol;
  report.dual_ok = report.dual <= claimed + tol;
  return report;
}

double EnumerateDeterministicMechanisms(const BallStructure& balls,
                                        std::uint64_t budget) {
  const auto member = MembershipOf(balls);
  const std::size_t inputs = member.size();
  std::vector<std::vector<std::size_t>> options(inputs);
  std::uint64_t total = 1;
  for (std::size_t x = 0; x < inputs; ++x) {
    for (std::size_t y = 0; y < balls.output_size(); ++y) {
      if (member[x][y]) options[x].push_back(y);
    }
    if (options[x].empty()) {
      throw Error(ErrorCode::kEmptyBall,
                  "input " + std::to_string(x) + " has an empty ball", x);
    }
    total *= options[x].size();
    if (total > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(budget) +
                      " deterministic mechanisms");
    }
  }
  std::vector<std::size_t> choice(inputs, 0);
  std::vector<std::uint64_t> stamp(balls.output_size(), 0);
  std::uint64_t round = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    ++round;
    std::size_t image = 0;
    for (std::size_t x = 0; x < inputs; ++x) {
      const std::size_t y = options[x][choice[x]];
      if (stamp[y] != round) {
        stamp[y] = round;
        ++image;
      }
    }
    best = std::min(best, image);
    std::size_t x = 0;
    while (x < inputs && ++choice[x] == options[x].size()) choice[x++] = 0;
    if (x == inputs) break;
  }
  return std::log(static_cast<double>(best));
}

std::vector<std::vector<bool>> OracleMembership(
    const std::vector<std::vector<double>>& distortion, double budget) {
  std::vector<std::vector<bool>> member;
  member.reserve(distortion.size());
  for (const auto& row : distortion) {
    std::vector<bool> flags(row.size());
    for (std::size_t y = 0; y < row.size(); ++y) flags[y] = row[y] <= budget;
    member.push_back(std::move(flags));
  }
  return member;
}

double OracleMaximalLeakage(const std::vector<std::vector<double>>& channel) {
  if (channel.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t y = 0; y < channel[0].size(); ++y) {
    double top = 0.0;
    for (const auto& row : channel) top = std::max(top, row[y]);
    total += top;
  }
  return std::log(total);
}

std::string ToJsonLine(const VerificationRecord& record) {
  nlohmann::ordered_json j;
  j["instance"] = record.instance;
  j["check"] = record.check;
  j["claimed"] = Number(record.claimed);
  j["oracle"] = Number(record.oracle);
  j["tolerance"] = Number(record.tolerance);
  j["pass"] = record.pass;
  return j.dump();
}

std::vector<VerificationRecord> VerifyInstance(
    const std::string& name, const DistortionSpec& spec,
    const std::optional<ProbVector>& px) {
  std::vector<VerificationRecord> out;
  const BallStructure balls = ComputeBalls(spec);
  const auto member = OracleMembership(spec.matrix(), spec.budget());
  const int outputs = static_cast<int>(spec.output_size());

  const QStarSolution lp = SolveQStar(balls);
  const double put = -std::log(lp.q_star);

  if (outputs <= 4) {
    const GridSpec grid{DefaultResolution(outputs), outputs};
    const GridMinimum g = GridMinimizeOverSimplex(
        [&](std::span<const double> q) { return -MinBallMass(member, q); },
        grid);
    // Any q* rounds to a grid point moving every coordinate by < 1/k; a ball
    // mass, or its complement, sums at most floor(d/2) of those moves.
    const double tol = static_cast<double>(outputs / 2) / grid.resolution;
    out.push_back(Record(name, "q_star_vs_grid", lp.q_star, -g.value, tol,
                         lp.q_star >= -g.value - 1e-12 &&
                             lp.q_star + g.value <= tol));
  }

  const CertificateReport cert = CertifyGameValue(
      balls, lp.q_y.values(), lp.certificate.values(), lp.q_star);
  out.push_back(Record(name, "q_star_certificate", lp.q_star, cert.dual, 1e-8,
                       cert.pass()));

  try {
    const double enumerated = EnumerateDeterministicMechanisms(balls);
    out.push_back(Record(name, "deterministic_upper_bound", put, enumerated,
                         1e-9, put <= enumerated + 1e-9));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
  }

  const PutSolution two = PutAlpha(2.0, balls, std::nullopt);
  const PutSolution inf = PutAlpha(kInf, balls, std::nullopt);
  out.push_back(Record(name, "alpha_invariance", two.value, inf.value, 1e-8,
                       std::abs(two.value - inf.value) <= 1e-8));
  const double maxl = OracleMaximalLeakage(inf.mechanism.Rows());
  out.push_back(Record(name, "mechanism_maximal_leakage", put, maxl, 1e-9,
                       std::abs(put - maxl) <= 1e-9));

  if (px && outputs <= 4) {
    const PutSolution one = PutAlpha(1.0, balls, px);
    const GridSpec grid{DefaultResolution(outputs), outputs};
    const GridMinimum g = GridMinimizeOverSimplex(
        [&](std::span<const double> q) {
          double total = 0.0;
          for (std::size_t x = 0; x < member.size(); ++x) {
            if ((*px)[x] == 0.0) continue;
            double mass = 0.0;
            for (int y = 0; y < outputs; ++y) {
              if (member[x][y]) mass += q[y];
            }
            total += mass > 0.0 ? -(*px)[x] * std::log(mass) : kInf;
          }
          return total;
        },
        grid);
    // Rounding the optimum moves each ball mass by at most floor(d/2)/k;
    // -log has slope 1/mass there.
    const double step = static_cast<double>(outputs / 2) / grid.resolution;
    double tol = 0.0;
    for (std::size_t x = 0; x < member.size(); ++x) {
      if ((*px)[x] == 0.0) continue;
      const double mass = balls.Mass(one.q_y.values(), x);
      tol += mass > step ? (*px)[x] * step / (mass - step) : kInf;
    }
    out.push_back(Record(name, "alpha_one_vs_grid", one.value, g.value, tol,
                         one.value <= g.value + 1e-9 &&
                             g.value - one.value <= tol));
  }
  return out;
}

std::vector<VerificationRecord> VerifySuite(const VerifyOptions& options) {
  std::vector<VerificationRecord> out;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> input_size(2, 6);
  std::uniform_int_distribution<std::size_t> output_size(2, 4);
  for (int i = 0; i < options.random_instances; ++i) {
    const std::size_t inputs = input_size(rng);
    const std::size_t outputs = output_size(rng);
    const DistortionSpec spec = RandomSpec(rng, inputs, outputs);
    std::optional<ProbVector> px;
    if (i % 2 == 0) px = RandomPrior(rng, inputs);
    auto records = VerifyInstance("random-" + std::to_string(i), spec, px);
    out.insert(out.end(), records.begin(), records.end());
  }
  for (int n = 1; n <= 30; ++n) {
    for (int m = 0; m <= n; ++m) {
      AppendTypesChecks({n, m}, n <= options.types_max_n, out);
    }
  }
  return out;
}

}  // namespace hdput
