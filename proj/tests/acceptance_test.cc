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


// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hdput/core.h"
#include "hdput/divergence.h"
#include "hdput/leakage.h"
#include "hdput/oracle.h"
#include "hdput/putsolver.h"
#include "hdput/typesmodel.h"
#include "test_util.h"

namespace hdput {
namespace {

using testing::RandomBalls;
using testing::RandomPrior;
using testing::RandomSpec;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void Check(bool ok, const std::string& why) {
    if (!ok) Fail(why);
  }
};

std::string Fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

// Shared by criteria 3-5.
std::vector<BallStructure> RandomBallSet(std::uint64_t seed, int count,
                                         std::size_t max_size) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<BallStructure> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t inputs = size(rng);
    const std::size_t outputs = size(rng);
    out.push_back(RandomBalls(rng, inputs, outputs));
  }
  return out;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Outcome TypesFigure() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const TypesInstance inst{8, 2};
  const TypeMechanism mech = BuildTypeMechanism(inst);
  o.Check(mech.t_star == std::vector<int>({2, 7}), "output types differ");
  for (int i = 0; i <= 8; ++i) {
    const int want = i <= 4 ? 2 : 7;
    o.Check(mech.assignment[i] == want,
            "type " + std::to_string(i) + " mapped to " +
                std::to_string(mech.assignment[i]));
  }
  const double closed = PutTypesClosedForm(inst);
  const double lp =
      PutAlpha(2.0, ComputeBalls(TypesAsGenericInstance(inst)), std::nullopt)
          .value;
  o.Check(closed == std::log(2.0), Fmt("closed form %.17g", closed));
  o.Check(std::abs(lp - std::log(2.0)) <= 1e-12, Fmt("solver %.17g", lp));
  const double elapsed = Seconds(start);
  o.Check(elapsed < 1.0, Fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = Fmt("PUT = %.12g nats, %.3f s", lp, elapsed);
  return o;
}

Outcome TypesClosedFormSweep() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int instances = 0;
  double worst = 0.0;
  for (int n = 1; n <= 25; ++n) {
    for (int m = 0; m <= n; ++m) {
      ++instances;
      const TypesInstance inst{n, m};
      const double lp =
          PutAlpha(2.0, ComputeBalls(TypesAsGenericInstance(inst)),
                   std::nullopt)
              .value;
      const double want =
          std::log(std::ceil((n + 1.0) / (2.0 * m + 1.0)));
      worst = std::max(worst, std::abs(lp - want));
      o.Check(std::abs(lp - want) <= 1e-8,
              "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                  Fmt(": %.12g vs %.12g", lp, want));
    }
  }
  const double elapsed = Seconds(start);
  // Every pair 1 <= n <= 25, 0 <= m <= n: sum of (n + 1) = 350.
  o.Check(instances == 25 * 26 / 2 + 25,
          "instance count " + std::to_string(instances));
  o.Check(elapsed < 30.0, Fmt("took %.3f s", elapsed));
  if (o.pass) {
    o.detail = std::to_string(instances) +
               Fmt(" instances, max error %.3g, %.3f s", worst, elapsed);
  }
  return o;
}

Outcome AlphaInvariance(const std::vector<BallStructure>& set) {
  Outcome o;
  const double alphas[] = {1.5, 2.0, 10.0, kInf};
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::vector<PutSolution> sols;
    for (double a : alphas) sols.push_back(PutAlpha(a, set[i], std::nullopt));
    for (const PutSolution& s : sols) {
      o.Check(std::abs(s.value - sols[0].value) <= 1e-8,
              "instance " + std::to_string(i) + Fmt(": %.12g vs %.12g",
                                                    s.value, sols[0].value));
      o.Check(s.mechanism == sols[0].mechanism,
              "instance " + std::to_string(i) + ": mechanisms differ");
    }
  }
  if (o.pass) o.detail = std::to_string(set.size()) + " instances";
  return o;
}

Outcome MechanismLeakage(const std::vector<BallStructure>& set) {
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const PutSolution sol = PutAlpha(kInf, set[i], std::nullopt);
    const double want = -std::log(sol.q_star->q_star);
    const auto support = FullSupport(set[i].input_size());
    for (double a : {2.0, kInf}) {
      const double got =
          MaximalAlphaLeakage(a, sol.mechanism, support, std::nullopt);
      worst = std::max(worst, std::abs(got - want));
      o.Check(std::abs(got - want) <= 1e-6,
              "instance " + std::to_string(i) + Fmt(" alpha %g: ", a) +
                  Fmt("%.12g vs %.12g", got, want));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(set.size()) +
               Fmt(" instances, max error %.3g", worst);
  }
  return o;
}

Outcome BridgeIdentity(const std::vector<BallStructure>& set) {
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double want = -std::log(SolveQStar(set[i]).q_star);
    for (double a : {1.5, 2.0, 4.0}) {
      const double independent =
          PutFIndependent(FDivergence::Hellinger(a), set[i]).value;
      const double got = Lemma1Bridge(a, independent);
      worst = std::max(worst, std::abs(got - want));
      o.Check(std::abs(got - want) <= 1e-9,
              "instance " + std::to_string(i) + Fmt(" alpha %g: ", a) +
                  Fmt("%.12g vs %.12g", got, want));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(set.size()) +
               Fmt(" instances, max error %.3g", worst);
  }
  return o;
}

Outcome KlMatchesAlphaOne() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  double worst = 0.0;
  const FDivergence kl = FDivergence::KullbackLeibler();
  for (int i = 0; i < 50; ++i) {
    const std::size_t inputs = size(rng);
    const BallStructure balls = RandomBalls(rng, inputs, size(rng));
    const ProbVector px = RandomPrior(rng, inputs);
    const double a = PutFDependent(kl, balls, px).value;
    const double b = PutAlpha(1.0, balls, px).value;
    worst = std::max(worst, std::abs(a - b));
    o.Check(std::abs(a - b) <= 1e-8,
            "instance " + std::to_string(i) + Fmt(": %.12g vs %.12g", a, b));
  }
  if (o.pass) o.detail = Fmt("50 instances, max error %.3g", worst);
  return o;
}

Outcome GridAgreement() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> inputs(1, 6);
  std::uniform_int_distribution<std::size_t> outputs(1, 3);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BallStructure balls = RandomBalls(rng, inputs(rng), outputs(rng));
    const QStarSolution sol = SolveQStar(balls);
    const GridSpec grid{200, static_cast<int>(balls.output_size())};
    const GridMinimum best = GridMinimizeOverSimplex(
        [&balls](std::span<const double> q) {
          double lowest = 1.0;
          for (std::size_t x = 0; x < balls.input_size(); ++x) {
            double mass = 0.0;
            for (std::size_t y = 0; y < q.size(); ++y) {
              if (balls.Contains(x, y)) mass += q[y];
            }
            lowest = std::min(lowest, mass);
          }
          return -lowest;
        },
        grid);
    const double diff = std::abs(sol.q_star + best.value);
    worst = std::max(worst, diff);
    o.Check(diff <= 5e-3, "instance " + std::to_string(i) +
                              Fmt(": LP %.12g vs grid %.12g", sol.q_star,
                                  -best.value));
    const CertificateReport cert =
        CertifyGameValue(balls, sol.q_y.values(), sol.certificate.values(),
                         sol.q_star, 1e-8);
    o.Check(cert.pass(), "instance " + std::to_string(i) +
                             ": certificate fails");
  }
  if (o.pass) o.detail = Fmt("100 instances, max grid gap %.3g", worst);
  return o;
}

double Entropy(const ProbVector& p) {
  double h = 0.0;
  for (double v : p.values()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

Outcome DegenerateCases() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int i = 0; i < 20; ++i) {
    const std::size_t inputs = size(rng);
    const DistortionSpec raw = RandomSpec(rng, inputs, size(rng));
    const BallStructure balls =
        ComputeBalls(raw.WithBudget(raw.MaxDistortion()));
    const ProbVector px = RandomPrior(rng, inputs);
    const std::vector<LeakageQuery> queries = {
        MaxAlphaQuery{1.0, px, std::nullopt},
        MaxAlphaQuery{1.5, std::nullopt, std::nullopt},
        MaxAlphaQuery{2.0, px, std::nullopt},
        MaxAlphaQuery{kInf, std::nullopt, std::nullopt},
        DistDependentQuery{FDivergence::KullbackLeibler(), px},
        DistDependentQuery{FDivergence::TotalVariation(), px},
        DistDependentQuery{FDivergence::Hellinger(2.0), px},
        DistIndependentQuery{FDivergence::Hellinger(0.5), std::nullopt},
        DistIndependentQuery{FDivergence::TotalVariation(), std::nullopt},
    };
    for (const LeakageQuery& q : queries) {
      const double v = SolvePut(balls, q).value;
      o.Check(std::abs(v) <= 1e-9, "full budget, " + DescribeQuery(q) +
                                       Fmt(": %.12g", v));
    }
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const BallStructure balls = ComputeBalls(DistortionSpec::Hamming(k, 0.0));
    for (double a : {1.5, 2.0, 10.0, kInf}) {
      const double v = PutAlpha(a, balls, std::nullopt).value;
      o.Check(std::abs(v - std::log(static_cast<double>(k))) <= 1e-6,
              "Hamming k=" + std::to_string(k) + Fmt(" alpha %g: %.12g", a, v));
    }
    for (int trial = 0; trial < 3; ++trial) {
      const ProbVector px = RandomPrior(rng, k);
      const double v = PutAlpha(1.0, balls, px).value;
      o.Check(std::abs(v - Entropy(px)) <= 1e-6,
              "Hamming k=" + std::to_string(k) +
                  Fmt(" alpha 1: %.12g vs H %.12g", v, Entropy(px)));
    }
  }
  if (o.pass) o.detail = "full-budget and Hamming D=0 cases";
  return o;
}

Outcome PropertySuites() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  int checks = 0;

  // Balls grow with the budget.
  for (int i = 0; i < 30; ++i) {
    const DistortionSpec spec = RandomSpec(rng, size(rng), size(rng));
    const double budgets[] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    for (std::size_t b = 1; b < std::size(budgets); ++b) {
      const BallStructure small = ComputeBalls(spec.WithBudget(budgets[b - 1]));
      const BallStructure large = ComputeBalls(spec.WithBudget(budgets[b]));
      for (std::size_t x = 0; x < spec.input_size(); ++x) {
        for (std::size_t y : small.Ball(x)) {
          ++checks;
          o.Check(large.Contains(x, y), "ball monotonicity");
        }
      }
    }
  }

  // g is nonincreasing on [0, 1].
  for (const FDivergence& f :
       {FDivergence::KullbackLeibler(), FDivergence::TotalVariation(),
        FDivergence::Hellinger(0.5), FDivergence::Hellinger(2.0),
        FDivergence::Hellinger(4.0)}) {
    double previous = f.G(0.0);
    for (int s = 1; s <= 1000; ++s) {
      const double current = f.G(s / 1000.0);
      ++checks;
      o.Check(current <= previous + 1e-12, "g monotonicity for " + f.name());
      previous = current;
    }
  }

  // PUT is nonincreasing in the budget.
  const std::vector<double> budgets = {0.0, 0.1, 0.25, 0.4, 0.55, 0.7, 1.0};
  for (int i = 0; i < 10; ++i) {
    const std::size_t inputs = size(rng);
    const DistortionSpec spec = RandomSpec(rng, inputs, size(rng));
    const ProbVector px = RandomPrior(rng, inputs);
    const std::vector<LeakageQuery> queries = {
        MaxAlphaQuery{1.0, px, std::nullopt},
        MaxAlphaQuery{2.0, std::nullopt, std::nullopt},
        DistDependentQuery{FDivergence::Hellinger(2.0), px},
        DistDependentQuery{FDivergence::TotalVariation(), px},
        DistIndependentQuery{FDivergence::KullbackLeibler(), std::nullopt},
    };
    for (const LeakageQuery& q : queries) {
      const auto rows = TradeoffSweep(spec, budgets, q);
      for (std::size_t r = 1; r < rows.size(); ++r) {
        ++checks;
        o.Check(rows[r].value <= rows[r - 1].value + 1e-7,
                "PUT monotonicity for " + DescribeQuery(q) +
                    Fmt(" at D=%g: %.12g", rows[r].budget, rows[r].value));
      }
    }
  }

  // Maximal alpha-leakage is nondecreasing in alpha.
  for (int i = 0; i < 20; ++i) {
    const std::size_t inputs = size(rng);
    const Channel ch = testing::RandomChannel(rng, inputs, size(rng));
    const ProbVector px = RandomPrior(rng, inputs);
    const auto support = FullSupport(inputs);
    double previous = MaximalAlphaLeakage(1.0, ch, support, px);
    for (double a : {1.25, 1.5, 2.0, 4.0, 10.0, kInf}) {
      const double current = MaximalAlphaLeakage(a, ch, support, std::nullopt);
      ++checks;
      o.Check(current >= previous - 1e-7,
              Fmt("alpha monotonicity at %g: %.12g", a, current));
      previous = current;
    }
  }

  // Optimal type mechanisms partition the type alphabet.
  for (int n = 1; n <= 30; ++n) {
    for (int m = 0; m <= n; ++m) {
      const TypeMechanism mech = BuildTypeMechanism({n, m});
      const std::string tag =
          "partition n=" + std::to_string(n) + " m=" + std::to_string(m);
      ++checks;
      o.Check(static_cast<int>(mech.t_star.size()) ==
                  OptimalTypeCount({n, m}),
              tag + ": wrong output count");
      for (int t = 0; t <= n; ++t) {
        const int j = mech.assignment[t];
        o.Check(std::abs(t - j) <= m, tag + ": distortion exceeded");
        o.Check(std::find(mech.t_star.begin(), mech.t_star.end(), j) !=
                    mech.t_star.end(),
                tag + ": output outside the index set");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks";
  return o;
}

}  // namespace
}  // namespace hdput

int main() {
  using hdput::Outcome;
  const auto set = hdput::RandomBallSet(3, 50, 6);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> all = {
      {"types figure", hdput::TypesFigure},
      {"types closed form", hdput::TypesClosedFormSweep},
      {"alpha invariance", [&] { return hdput::AlphaInvariance(set); }},
      {"mechanism leakage", [&] { return hdput::MechanismLeakage(set); }},
      {"bridge identity", [&] { return hdput::BridgeIdentity(set); }},
      {"kl vs alpha one", hdput::KlMatchesAlphaOne},
      {"grid oracle", hdput::GridAgreement},
      {"degenerate cases", hdput::DegenerateCases},
      {"property suites", hdput::PropertySuites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    try {
      o = all[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu (%s): %s  %s\n", i + 1, all[i].first,
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
