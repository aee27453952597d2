// Copyright 2026 The colltomo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

/**
 * Deterministic generator of random operators and states. The normal
 * deviates are produced by an explicit Box-Muller transform over the raw
 * mt19937_64 stream, so a seed pins every draw independently of the standard
 * library's distribution implementations.
 */
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();

  /// Haar-like random pure state: normalized complex-normal vector.
  Vector pure_state(int dim);

  /// Ginibre density matrix G G^dagger / Tr.
  Matrix density_matrix(int dim);

  /// Random Hermitian matrix with complex-normal entries (not a state).
  Matrix hermitian(int dim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace colltomo
