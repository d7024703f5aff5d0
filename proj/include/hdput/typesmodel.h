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


// Binary datasets of length n under the type distortion
// d(x^n, y^n) = |#zeros(x^n) - #zeros(y^n)| / n with budget D = m / n.
// All datasets of a type class T(i) (exactly i zeros) share a feasibility
// ball, so everything here works on the (n+1)-symbol type alphabet.

#ifndef HDPUT_TYPESMODEL_H_
#define HDPUT_TYPESMODEL_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hdput/core.h"

namespace hdput {

struct TypesInstance {
  int n = 1;
  int m = 0;
};

// Throws Error(kInvalidArgument) unless n >= 1 and 0 <= m <= n.
void ValidateTypesInstance(const TypesInstance& inst);

// ceil((n + 1) / (2m + 1)): the number of output type classes an optimal
// mechanism uses.
int OptimalTypeCount(const TypesInstance& inst);

// Throws Error(kLengthMismatch) on unequal lengths and kInvalidArgument on
// non-binary entries.
double TypeDistortion(std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> y);

// log ceil((n + 1) / (2m + 1)) nats; the optimal maximal alpha-leakage for
// every alpha > 1.
double PutTypesClosedForm(const TypesInstance& inst);

// Type indices whose balls partition {0, ..., n}, spaced 2m + 1 apart. Starts
// at m when m + (K-1)(2m+1) <= n, else at n - (K-1)(2m+1), so the last index
// is n.
std::vector<int> BuildIndexSet(const TypesInstance& inst);

// j zeros followed by n - j ones.
std::string RepresentativeDataset(int n, int j);

struct TypeMechanism {
  TypesInstance instance;
  std::vector<int> t_star;
  std::vector<int> index_set;
  // assignment[i] is the output type for every input dataset in T(i).
  std::vector<int> assignment;
  std::map<int, std::string> representatives;
  // Probability the optimal output distribution puts on each
  // representative: 1 / |index_set|.
  double output_mass = 1.0;

  // Deterministic channel on the type alphabet.
  Channel TypeChannel() const;
  // The released dataset for an input dataset.
  std::string Release(std::span<const std::uint8_t> dataset) const;
};

TypeMechanism BuildTypeMechanism(const TypesInstance& inst);

// d(i, j) = |i - j| / n over types {0..n}, budget m / n.
DistortionSpec TypesAsGenericInstance(const TypesInstance& inst);

}  // namespace hdput

#endif  // HDPUT_TYPESMODEL_H_
