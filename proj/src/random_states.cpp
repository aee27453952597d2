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

#include "colltomo/random_states.hpp"

#include <cmath>

namespace colltomo {

double StateSampler::uniform() {
  // 53 uniform bits; avoids distribution objects so the stream is pinned.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StateSampler::normal() {
  double u1 = uniform();
  while (u1 == 0.0) {
    u1 = uniform();
  }
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex StateSampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Vector StateSampler::pure_state(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = complex_normal();
  }
  return v / v.norm();
}

Matrix StateSampler::density_matrix(int dim) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = complex_normal();
    }
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix StateSampler::hermitian(int dim) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = complex_normal();
    }
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace colltomo
