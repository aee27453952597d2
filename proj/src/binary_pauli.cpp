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

#include "colltomo/binary_pauli.hpp"

#include <string>

namespace colltomo {

BinaryTuple BinaryTuple::from_components(const std::vector<int>& comps) {
  const int n = static_cast<int>(comps.size());
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (comps[i] != 0 && comps[i] != 1) {
      throw DomainError("BinaryTuple: components must be 0 or 1");
    }
    bits |= static_cast<std::uint32_t>(comps[i]) << (n - 1 - i);
  }
  return BinaryTuple(bits, n);
}

std::vector<int> BinaryTuple::components() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i] = component(i);
  }
  return out;
}

void PauliMonomial::apply(const Vector& in, Vector& out) const {
  const int n = n_qubits();
  const std::uint32_t dim = 1u << n;
  if (in.size() != static_cast<Eigen::Index>(dim)) {
    throw DimensionError("PauliMonomial::apply: vector dimension mismatch");
  }
  out.resize(dim);
  const std::uint32_t beta = x_part.index();
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    const std::uint32_t row = kappa ^ beta;
    const double sign =
        (std::popcount(z_part.index() & row) & 1) ? -1.0 : 1.0;
    out[row] = sign * in[kappa];
  }
}

Matrix monomial_matrix(const PauliMonomial& p, int qubit_cap) {
  const int n = p.n_qubits();
  if (n > qubit_cap) {
    throw CapacityError("monomial_matrix: " + std::to_string(n) +
                        " qubits exceeds cap " + std::to_string(qubit_cap));
  }
  const std::uint32_t dim = 1u << n;
  Matrix m = Matrix::Zero(dim, dim);
  const std::uint32_t beta = p.x_part.index();
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    const std::uint32_t row = kappa ^ beta;
    m(row, kappa) = (std::popcount(p.z_part.index() & row) & 1) ? -1.0 : 1.0;
  }
  return m;
}

bool admissible(int n_qubits, const HammingTriple& t) {
  const auto in_range = [&](int v) { return v >= 0 && v <= n_qubits; };
  if (!in_range(t.m) || !in_range(t.n) || !in_range(t.k)) {
    return false;
  }
  if ((t.m + t.n + t.k) % 2 != 0) {
    return false;
  }
  const int n11 = (t.m + t.n - t.k) / 2;
  const int n10 = (t.m - t.n + t.k) / 2;
  const int n01 = (-t.m + t.n + t.k) / 2;
  const int n00 = n_qubits - (t.m + t.n + t.k) / 2;
  return n11 >= 0 && n10 >= 0 && n01 >= 0 && n00 >= 0;
}

PairClassCounts class_counts(int n_qubits, const HammingTriple& t) {
  if (!admissible(n_qubits, t)) {
    throw DomainError("class_counts: triple (" + std::to_string(t.m) + "," +
                      std::to_string(t.n) + "," + std::to_string(t.k) +
                      ") is not admissible for N=" + std::to_string(n_qubits));
  }
  PairClassCounts c;
  c.n11 = (t.m + t.n - t.k) / 2;
  c.n10 = (t.m - t.n + t.k) / 2;
  c.n01 = (-t.m + t.n + t.k) / 2;
  c.n00 = n_qubits - (t.m + t.n + t.k) / 2;
  return c;
}

std::vector<HammingTriple> enumerate_triples(int n_qubits) {
  if (n_qubits < 1) {
    throw DomainError("enumerate_triples: N must be >= 1");
  }
  std::vector<HammingTriple> out;
  for (int m = 0; m <= n_qubits; ++m) {
    for (int n = 0; n <= n_qubits; ++n) {
      for (int k = 0; k <= n_qubits; ++k) {
        HammingTriple t{m, n, k};
        if (admissible(n_qubits, t)) {
          out.push_back(t);
        }
      }
    }
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) {
    return 0;
  }
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::int64_t r_mnk(int n_qubits, const HammingTriple& t) {
  const PairClassCounts c = class_counts(n_qubits, t);
  // Multinomial assembled from binomials to stay in exact integers.
  return binomial(n_qubits, c.n11) * binomial(n_qubits - c.n11, c.n10) *
         binomial(n_qubits - c.n11 - c.n10, c.n01);
}

std::pair<BinaryTuple, BinaryTuple> representative_pair(
    int n_qubits, const HammingTriple& t, int variant) {
  const PairClassCounts c = class_counts(n_qubits, t);
  std::vector<int> alpha(n_qubits, 0);
  std::vector<int> beta(n_qubits, 0);
  // Layout: n11 shared ones, then the alpha-only ones, then the beta-only
  // ones, zeros afterwards. Variant 1 mirrors the layout.
  for (int i = 0; i < c.n11; ++i) {
    alpha[i] = 1;
    beta[i] = 1;
  }
  for (int i = c.n11; i < c.n11 + c.n10; ++i) {
    alpha[i] = 1;
  }
  for (int i = t.m; i < t.m + c.n01; ++i) {
    beta[i] = 1;
  }
  if (variant != 0) {
    std::reverse(alpha.begin(), alpha.end());
    std::reverse(beta.begin(), beta.end());
  }
  return {BinaryTuple::from_components(alpha),
          BinaryTuple::from_components(beta)};
}

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

bool is_hermitian(const Matrix& a, double tol) {
  return max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const Matrix& a, double tol) {
  Matrix id = Matrix::Identity(a.rows(), a.cols());
  return max_abs(a * a.adjoint() - id) <= tol;
}

double max_abs(const Matrix& a) {
  return a.cwiseAbs().maxCoeff();
}

}  // namespace colltomo
