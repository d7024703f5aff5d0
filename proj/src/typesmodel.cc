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


#include "hdput/typesmodel.h"

#include <cmath>
#include <cstdlib>
#include <string>

namespace hdput {
namespace {

int CountZeros(std::span<const std::uint8_t> dataset) {
  int zeros = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (dataset[i] > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "dataset entry " + std::to_string(i) + " is not binary", i);
    }
    zeros += dataset[i] == 0;
  }
  return zeros;
}

}  // namespace

void ValidateTypesInstance(const TypesInstance& inst) {
  if (inst.n < 1 || inst.m < 0 || inst.m > inst.n) {
    throw Error(ErrorCode::kInvalidArgument,
                "types instance needs n >= 1 and 0 <= m <= n, got n=" +
                    std::to_string(inst.n) + " m=" + std::to_string(inst.m));
  }
}

int OptimalTypeCount(const TypesInstance& inst) {
  ValidateTypesInstance(inst);
  const int width = 2 * inst.m + 1;
  return (inst.n + 1 + width - 1) / width;
}

double TypeDistortion(std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "datasets have different lengths " + std::to_string(x.size()) +
                    " and " + std::to_string(y.size()));
  }
  if (x.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "datasets must be non-empty");
  }
  const int diff = std::abs(CountZeros(x) - CountZeros(y));
  return static_cast<double>(diff) / static_cast<double>(x.size());
}

double PutTypesClosedForm(const TypesInstance& inst) {
  return std::log(static_cast<double>(OptimalTypeCount(inst)));
}

std::vector<int> BuildIndexSet(const TypesInstance& inst) {
  const int count = OptimalTypeCount(inst);
  const int width = 2 * inst.m + 1;
  const int span = (count - 1) * width;
  const int first = inst.m + span <= inst.n ? inst.m : inst.n - span;
  std::vector<int> index(count);
  for (int k = 0; k < count; ++k) index[k] = first + k * width;
  return index;
}

std::string RepresentativeDataset(int n, int j) {
  if (j < 0 || j > n) {
    throw Error(ErrorCode::kInvalidArgument, "type index out of range");
  }
  return std::string(static_cast<std::size_t>(j), '0') +
         std::string(static_cast<std::size_t>(n - j), '1');
}

TypeMechanism BuildTypeMechanism(const TypesInstance& inst) {
  TypeMechanism mech;
  mech.instance = inst;
  mech.index_set = BuildIndexSet(inst);
  mech.t_star = mech.index_set;
  mech.output_mass = 1.0 / static_cast<double>(mech.index_set.size());
  mech.assignment.assign(inst.n + 1, -1);
  for (int i = 0; i <= inst.n; ++i) {
    for (int j : mech.index_set) {
      if (std::abs(i - j) > inst.m) continue;
      if (mech.assignment[i] != -1) {
        throw Error(ErrorCode::kDomainError,
                    "type " + std::to_string(i) +
                        " is covered by two output balls",
                    static_cast<std::size_t>(i));
      }
      mech.assignment[i] = j;
    }
    if (mech.assignment[i] == -1) {
      throw Error(ErrorCode::kDomainError,
                  "type " + std::to_string(i) + " is not covered",
                  static_cast<std::size_t>(i));
    }
  }
  for (int j : mech.index_set) {
    mech.representatives[j] = RepresentativeDataset(inst.n, j);
  }
  return mech;
}

Channel TypeMechanism::TypeChannel() const {
  const std::size_t size = static_cast<std::size_t>(instance.n) + 1;
  std::vector<std::vector<double>> rows(size, std::vector<double>(size, 0.0));
  for (std::size_t i = 0; i < size; ++i) {
    rows[i][static_cast<std::size_t>(assignment[i])] = 1.0;
  }
  return Channel::FromRows(rows);
}

std::string TypeMechanism::Release(std::span<const std::uint8_t> dataset) const {
  if (static_cast<int>(dataset.size()) != instance.n) {
    throw Error(ErrorCode::kLengthMismatch,
                "dataset length does not match n=" + std::to_string(instance.n));
  }
  return representatives.at(assignment[CountZeros(dataset)]);
}

DistortionSpec TypesAsGenericInstance(const TypesInstance& inst) {
  ValidateTypesInstance(inst);
  const std::size_t size = static_cast<std::size_t>(inst.n) + 1;
  std::vector<std::vector<double>> d(size, std::vector<double>(size, 0.0));
  for (int i = 0; i <= inst.n; ++i) {
    for (int j = 0; j <= inst.n; ++j) {
      d[i][j] = static_cast<double>(std::abs(i - j)) / inst.n;
    }
  }
  return DistortionSpec(std::move(d), static_cast<double>(inst.m) / inst.n);
}

}  // namespace hdput
