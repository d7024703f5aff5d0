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


#include "hdput/io.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hdput {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

std::vector<double> NumberArray(const nlohmann::json& j,
                                const std::string& what) {
  if (!j.is_array()) Malformed(what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      Malformed(what + "[" + std::to_string(i) + "] is not a number");
    }
    out.push_back(j[i].get<double>());
  }
  return out;
}

nlohmann::json ParseJson(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json Number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

Json Vector(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(Number(x));
  return out;
}

double Bits(double nats) { return nats / std::log(2.0); }

}  // namespace

Problem ParseProblem(std::string_view text) {
  const nlohmann::json j = ParseJson(text);
  if (!j.is_object()) Malformed("problem spec must be a JSON object");
  if (!j.contains("distortion")) Malformed("problem spec lacks \"distortion\"");
  if (!j.contains("budget") || !j["budget"].is_number()) {
    Malformed("problem spec needs a numeric \"budget\"");
  }
  const auto& rows = j["distortion"];
  if (!rows.is_array()) Malformed("\"distortion\" must be a matrix");
  std::vector<std::vector<double>> d;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    d.push_back(NumberArray(rows[x], "distortion[" + std::to_string(x) + "]"));
  }
  Problem problem{DistortionSpec(std::move(d), j["budget"].get<double>()),
                  std::nullopt};
  if (j.contains("px") && !j["px"].is_null()) {
    problem.px = ProbVector::FromRaw(NumberArray(j["px"], "px"));
    if (problem.px->size() != problem.spec.input_size()) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "px has " + std::to_string(problem.px->size()) +
                      " entries but the distortion matrix has " +
                      std::to_string(problem.spec.input_size()) + " rows");
    }
  }
  return problem;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Malformed("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem LoadProblem(const std::string& path) {
  return ParseProblem(ReadFile(path));
}

ProbVector ParsePrior(std::string_view text) {
  const nlohmann::json j = ParseJson(text);
  if (j.is_object() && j.contains("px")) {
    return ProbVector::FromRaw(NumberArray(j["px"], "px"));
  }
  return ProbVector::FromRaw(NumberArray(j, "px"));
}

double ParseAlpha(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "inf" || lower == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  double alpha = 0.0;
  std::size_t used = 0;
  try {
    alpha = std::stod(lower, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != lower.size() || !(alpha >= 1.0)) {
    throw Error(ErrorCode::kInvalidAlpha,
                "alpha must be a real >= 1 or \"inf\", got \"" +
                    std::string(text) + "\"");
  }
  return alpha;
}

FDivergence ParseFDivergence(std::string_view text) {
  if (text == "kl") return FDivergence::KullbackLeibler();
  if (text == "tv") return FDivergence::TotalVariation();
  constexpr std::string_view kHellinger = "hellinger:";
  if (text.substr(0, kHellinger.size()) == kHellinger) {
    const double alpha = ParseAlpha(text.substr(kHellinger.size()));
    return FDivergence::Hellinger(alpha);
  }
  Malformed("unknown f-divergence \"" + std::string(text) +
            "\"; expected kl, tv or hellinger:<alpha>");
}

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string PutSolutionJson(const PutSolution& solution) {
  Json j;
  j["measure"] = DescribeQuery(solution.measure);
  j["value_nats"] = Number(solution.value);
  j["value_bits"] = Number(Bits(solution.value));
  if (solution.q_star) {
    j["q_star"] = Number(solution.q_star->q_star);
  } else {
    j["q_star"] = nullptr;
  }
  j["q_y"] = Vector(solution.q_y.values());
  Json mech = Json::array();
  for (std::size_t x = 0; x < solution.mechanism.input_size(); ++x) {
    mech.push_back(Vector(solution.mechanism.Row(x)));
  }
  j["mechanism"] = std::move(mech);
  if (solution.q_star) {
    j["dual_certificate"] = Vector(solution.q_star->certificate.values());
    j["gap"] = Number(solution.q_star->gap);
  } else {
    j["dual_certificate"] = nullptr;
    j["gap"] = Number(solution.diagnostics.gap);
  }
  if (!solution.diagnostics.note.empty()) {
    j["note"] = solution.diagnostics.note;
  }
  return j.dump(2) + "\n";
}

std::string MechanismCsv(const Channel& mechanism) {
  std::string out;
  for (std::size_t x = 0; x < mechanism.input_size(); ++x) {
    for (std::size_t y = 0; y < mechanism.output_size(); ++y) {
      if (y > 0) out += ',';
      out += FormatNumber(mechanism(x, y));
    }
    out += '\n';
  }
  return out;
}

std::string SweepCsv(std::span<const SweepRow> rows) {
  std::string out = "D,value_nats,value_bits,status\n";
  for (const SweepRow& row : rows) {
    out += FormatNumber(row.budget) + ',' + FormatNumber(row.value) + ',' +
           FormatNumber(Bits(row.value)) + ',' + row.status + '\n';
  }
  return out;
}

std::string TypesJson(const TypeMechanism& mechanism,
                      const std::optional<TypesAlphaOne>& alpha_one) {
  const double put = std::log(static_cast<double>(mechanism.t_star.size()));
  Json j;
  j["n"] = mechanism.instance.n;
  j["m"] = mechanism.instance.m;
  j["put_nats"] = put;
  j["put_bits"] = Bits(put);
  j["t_star"] = mechanism.t_star;
  Json assignment = Json::object();
  for (std::size_t i = 0; i < mechanism.assignment.size(); ++i) {
    assignment[std::to_string(i)] = mechanism.assignment[i];
  }
  j["assignment"] = std::move(assignment);
  Json reps = Json::object();
  for (const auto& [index, dataset] : mechanism.representatives) {
    reps[std::to_string(index)] = dataset;
  }
  j["representatives"] = std::move(reps);
  j["output_mass"] = mechanism.output_mass;
  if (alpha_one) {
    Json extra;
    extra["label"] = "beyond-paper";
    extra["prior"] = alpha_one->prior;
    extra["put_nats"] = Number(alpha_one->value);
    extra["put_bits"] = Number(Bits(alpha_one->value));
    j["alpha_one"] = std::move(extra);
  }
  return j.dump(2) + "\n";
}

}  // namespace hdput
