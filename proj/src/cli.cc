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


#include "hdput/cli.h"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdput/core.h"
#include "hdput/io.h"
#include "hdput/oracle.h"
#include "hdput/putsolver.h"
#include "hdput/typesmodel.h"

namespace hdput::cli {
namespace {

struct Options {
  std::string input;
  std::optional<std::string> alpha;
  std::optional<std::string> f;
  std::optional<std::string> px;
  std::string units = "nats";
  std::string budgets;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProbVector Binomial(std::size_t size) {
  const std::size_t n = size - 1;
  std::vector<double> p(size);
  // log C(n, i) - n log 2, exponentiated; exact enough for n in the
  // hundreds.
  for (std::size_t i = 0; i <= n; ++i) {
    p[i] = std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                    std::lgamma(n - i + 1.0) - n * std::log(2.0));
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return ProbVector::FromRaw(std::move(p));
}

std::optional<ProbVector> ResolvePrior(const Options& opt, std::size_t size,
                                       std::optional<ProbVector> fallback) {
  if (!opt.px) return fallback;
  if (*opt.px == "uniform") return ProbVector::Uniform(size);
  if (*opt.px == "binomial") return Binomial(size);
  ProbVector px = ParsePrior(ReadFile(*opt.px));
  if (px.size() != size) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "prior has " + std::to_string(px.size()) +
                    " entries, expected " + std::to_string(size));
  }
  return px;
}

// --alpha selects maximal alpha-leakage. --f selects an f-leakage: the
// prior-dependent one when a prior is available, else the prior-free one.
LeakageQuery BuildQuery(const Options& opt,
                        const std::optional<ProbVector>& px) {
  if (opt.alpha.has_value() == opt.f.has_value()) {
    throw UsageError("exactly one of --alpha and --f is required");
  }
  if (opt.alpha) return MaxAlphaQuery{ParseAlpha(*opt.alpha), px, {}};
  const FDivergence f = ParseFDivergence(*opt.f);
  if (px) return DistDependentQuery{f, *px};
  return DistIndependentQuery{f, {}};
}

double InUnits(const Options& opt, double nats) {
  return opt.units == "bits" ? nats / std::log(2.0) : nats;
}

void Emit(const Options& opt, const std::string& artifact,
          const std::string& summary, std::ostream& out) {
  if (!opt.out) {
    out << artifact;
    return;
  }
  std::ofstream file(*opt.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + *opt.out);
  file << artifact;
  if (!file.flush()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + *opt.out);
  }
  out << summary << '\n';
}

std::string ValueSummary(const Options& opt, const std::string& label,
                         double nats) {
  return label + ": " + FormatNumber(InUnits(opt, nats)) + " " + opt.units;
}

std::vector<double> ParseBudgets(const std::string& text) {
  std::vector<double> budgets;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError("bad budget \"" + item + "\" in --budgets");
    }
    budgets.push_back(v);
  }
  if (budgets.empty()) throw UsageError("--budgets needs at least one value");
  return budgets;
}

int RunPut(const Options& opt, bool mechanism_only, std::ostream& out) {
  const Problem problem = LoadProblem(opt.input);
  const auto px = ResolvePrior(opt, problem.spec.input_size(), problem.px);
  const LeakageQuery query = BuildQuery(opt, px);
  const PutSolution solution = SolvePut(ComputeBalls(problem.spec), query);
  if (mechanism_only) {
    Emit(opt, MechanismCsv(solution.mechanism),
         ValueSummary(opt, "mechanism written; value", solution.value), out);
  } else {
    Emit(opt, PutSolutionJson(solution),
         ValueSummary(opt, "put", solution.value), out);
  }
  return kExitOk;
}

int RunTypes(const Options& opt, std::ostream& out) {
  if (opt.f) throw UsageError("types supports --alpha only");
  const TypesInstance inst{opt.n, opt.m};
  const TypeMechanism mech = BuildTypeMechanism(inst);
  std::optional<TypesAlphaOne> alpha_one;
  if (opt.alpha && ParseAlpha(*opt.alpha) == 1.0) {
    if (!opt.px) {
      throw Error(ErrorCode::kMissingPrior,
                  "alpha = 1 on types needs --px uniform|binomial|<path>");
    }
    const auto px = ResolvePrior(opt, static_cast<std::size_t>(opt.n) + 1,
                                 std::nullopt);
    const PutSolution one =
        PutAlpha(1.0, ComputeBalls(TypesAsGenericInstance(inst)), px);
    alpha_one = TypesAlphaOne{*opt.px, one.value};
  }
  const double nats = alpha_one ? alpha_one->value : PutTypesClosedForm(inst);
  Emit(opt, TypesJson(mech, alpha_one), ValueSummary(opt, "put", nats), out);
  return kExitOk;
}

int RunSweep(const Options& opt, std::ostream& out) {
  constexpr std::string_view kTypes = "types:";
  std::optional<DistortionSpec> spec;
  std::optional<ProbVector> file_px;
  if (opt.input.rfind(kTypes, 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(opt.input.substr(kTypes.size()));
    } catch (const std::exception&) {
      throw UsageError("bad types instance \"" + opt.input + "\"");
    }
    spec = TypesAsGenericInstance({n, 0});
  } else {
    Problem problem = LoadProblem(opt.input);
    spec = problem.spec;
    file_px = problem.px;
  }
  const auto px = ResolvePrior(opt, spec->input_size(), file_px);
  const std::vector<double> budgets = ParseBudgets(opt.budgets);
  const auto rows = TradeoffSweep(*spec, budgets, BuildQuery(opt, px));
  Emit(opt, SweepCsv(rows),
       "sweep: " + std::to_string(rows.size()) + " budgets", out);
  return kExitOk;
}

int RunVerify(const Options& opt, std::ostream& out) {
  std::vector<VerificationRecord> records;
  if (opt.input.empty()) {
    VerifyOptions vo;
    vo.seed = opt.seed;
    records = VerifySuite(vo);
  } else {
    const Problem problem = LoadProblem(opt.input);
    const auto px = ResolvePrior(opt, problem.spec.input_size(), problem.px);
    records = VerifyInstance(opt.input, problem.spec, px);
  }
  std::string report;
  std::size_t failed = 0;
  for (const auto& r : records) {
    report += ToJsonLine(r) + '\n';
    failed += !r.pass;
  }
  Emit(opt, report,
       "verify: " + std::to_string(records.size()) + " checks, " +
           std::to_string(failed) + " failed",
       out);
  return failed == 0 ? kExitOk : kExitVerification;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyBall:
      return kExitInfeasible;
    case ErrorCode::kNotADistribution:
    case ErrorCode::kAlphabetMismatch:
    case ErrorCode::kInvalidAlpha:
    case ErrorCode::kMissingPrior:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal privacy-utility tradeoffs under hard distortion "
               "constraints",
               "hdput"};
  app.require_subcommand(1);
  Options opt;

  const auto add_measure = [&opt](CLI::App* cmd) {
    cmd->add_option("--alpha", opt.alpha, "Order of maximal alpha-leakage "
                                          "(real >= 1 or inf)");
    cmd->add_option("--f", opt.f, "f-divergence: kl, tv or hellinger:<a>");
  };
  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--px", opt.px, "Prior: JSON file, uniform or binomial");
    cmd->add_option("--units", opt.units, "Units of the summary line")
        ->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--out", opt.out, "Output file (default stdout)");
    cmd->add_option("--seed", opt.seed, "Seed for randomized checks");
  };

  CLI::App* put = app.add_subcommand("put", "Solve for the optimal tradeoff");
  put->add_option("input", opt.input, "Problem spec JSON")->required();
  add_measure(put);
  add_common(put);

  CLI::App* mech =
      app.add_subcommand("mechanism", "Write the optimal mechanism as CSV");
  mech->add_option("input", opt.input, "Problem spec JSON")->required();
  add_measure(mech);
  add_common(mech);

  CLI::App* types =
      app.add_subcommand("types", "Binary datasets of length n, budget m/n");
  types->add_option("n", opt.n, "Dataset length")->required();
  types->add_option("m", opt.m, "Budget numerator")->required();
  add_measure(types);
  add_common(types);

  CLI::App* sweep =
      app.add_subcommand("sweep", "Tradeoff value over a list of budgets");
  sweep->add_option("input", opt.input, "Problem spec JSON or types:<n>")
      ->required();
  sweep->add_option("--budgets", opt.budgets, "Comma-separated budgets")
      ->required();
  add_measure(sweep);
  add_common(sweep);

  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check solvers against the oracle");
  verify->add_option("input", opt.input, "Problem spec JSON (default: suite)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (put->parsed()) return RunPut(opt, false, out);
    if (mech->parsed()) return RunPut(opt, true, out);
    if (types->parsed()) return RunTypes(opt, out);
    if (sweep->parsed()) return RunSweep(opt, out);
    return RunVerify(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
}

}  // namespace hdput::cli
