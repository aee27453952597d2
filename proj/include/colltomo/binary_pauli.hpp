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

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "colltomo/errors.hpp"

namespace colltomo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense matrices beyond this many qubits are refused unless the caller
/// raises the cap explicitly.
inline constexpr int kDefaultQubitCap = 10;

/**
 * An element of Z_2^N. Component i (1-based, as in tuple notation) is stored
 * in bit N-i of `bits`, so that `index()` is directly the computational-basis
 * index of the labelled basis state: component 1 is the most significant bit.
 */
class BinaryTuple {
 public:
  BinaryTuple(std::uint32_t bits, int n_qubits) : bits_(bits), n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 31) {
      throw DomainError("BinaryTuple: n_qubits out of range");
    }
    if (bits >> n_qubits) {
      throw DomainError("BinaryTuple: bits exceed n_qubits");
    }
  }

  static BinaryTuple zero(int n_qubits) { return BinaryTuple(0, n_qubits); }

  /// Builds a tuple from its components (component 1 first).
  static BinaryTuple from_components(const std::vector<int>& comps);

  int n_qubits() const { return n_; }
  std::uint32_t index() const { return bits_; }

  /// Component i, 0-based here: component(0) is tuple component 1.
  int component(int i) const { return (bits_ >> (n_ - 1 - i)) & 1u; }

  std::vector<int> components() const;

  int weight() const { return std::popcount(bits_); }

  /// Componentwise sum mod 2.
  BinaryTuple operator+(const BinaryTuple& other) const {
    check_same(other);
    return BinaryTuple(bits_ ^ other.bits_, n_);
  }

  BinaryTuple complement() const {
    return BinaryTuple(~bits_ & ((1u << n_) - 1u), n_);
  }

  bool operator==(const BinaryTuple& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

  void check_same(const BinaryTuple& other) const {
    if (n_ != other.n_) {
      throw DimensionError("BinaryTuple: mismatched n_qubits");
    }
  }

 private:
  std::uint32_t bits_;
  int n_;
};

inline int hamming_weight(const BinaryTuple& t) { return t.weight(); }

/// Sum_i a_i b_i mod 2. Used in exponents of (-1).
inline int dot_mod2(const BinaryTuple& a, const BinaryTuple& b) {
  a.check_same(b);
  return std::popcount(a.index() & b.index()) & 1;
}

/// Sum_i a_i b_i over the integers. Used in exponents of (+-i).
inline int dot_integer(const BinaryTuple& a, const BinaryTuple& b) {
  a.check_same(b);
  return std::popcount(a.index() & b.index());
}

/**
 * A Pauli monomial Z_alpha X_beta. Acting on a computational basis state the
 * X factor is applied first:
 *
 *   Z_alpha X_beta |kappa> = (-1)^{alpha.(kappa+beta)} |kappa+beta>.
 */
struct PauliMonomial {
  BinaryTuple z_part;
  BinaryTuple x_part;

  PauliMonomial(BinaryTuple z, BinaryTuple x) : z_part(z), x_part(x) {
    z_part.check_same(x_part);
  }

  int n_qubits() const { return z_part.n_qubits(); }

  /// Sign (+1/-1) of the single nonzero entry in column `kappa`; the entry
  /// sits in row `kappa ^ x_part`.
  int column_sign(std::uint32_t kappa) const {
    std::uint32_t row = kappa ^ x_part.index();
    return (std::popcount(z_part.index() & row) & 1) ? -1 : 1;
  }

  /// out = Z_alpha X_beta * in (no allocation of a dense matrix).
  void apply(const Vector& in, Vector& out) const;
};

/// Dense 2^N x 2^N matrix of the monomial. Entries are exactly 0 and +-1.
Matrix monomial_matrix(const PauliMonomial& p, int qubit_cap = kDefaultQubitCap);

/// Hamming-weight triple (m, n, k) = (h(alpha), h(beta), h(alpha+beta)).
struct HammingTriple {
  int m = 0;
  int n = 0;
  int k = 0;

  auto operator<=>(const HammingTriple&) const = default;
  int sum() const { return m + n + k; }
};

/**
 * Position-class counts of a pair realizing a weight triple: n11 positions
 * where both tuples are 1, n10 where only the first is, and so on. A triple
 * is admissible iff all four counts are non-negative integers.
 */
struct PairClassCounts {
  int n00 = 0;
  int n01 = 0;
  int n10 = 0;
  int n11 = 0;
};

/// True iff some pair (alpha, beta) in Z_2^N x Z_2^N has weights (m, n, k).
bool admissible(int n_qubits, const HammingTriple& t);

/// Class counts for an admissible triple; throws DomainError otherwise.
PairClassCounts class_counts(int n_qubits, const HammingTriple& t);

/// All admissible triples for N qubits in lexicographic (m, n, k) order.
/// The count is (N+1)(N+2)(N+3)/6.
std::vector<HammingTriple> enumerate_triples(int n_qubits);

/// Number of pairs (alpha, beta) with weights (m, n, k): the multinomial
/// N! / (n11! n00! n01! n10!).
std::int64_t r_mnk(int n_qubits, const HammingTriple& t);

/**
 * A canonical pair (alpha, beta) realizing an admissible weight triple:
 * alpha = 1^m 0^{N-m}, with the overlapping ones of beta packed first.
 * `variant` 1 lays the same pattern out from the opposite end, giving a
 * second, generally different, representative.
 */
std::pair<BinaryTuple, BinaryTuple> representative_pair(
    int n_qubits, const HammingTriple& t, int variant = 0);

/// Weight triple of a concrete pair.
inline HammingTriple weights_of(const BinaryTuple& a, const BinaryTuple& b) {
  return HammingTriple{a.weight(), b.weight(), (a + b).weight()};
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// i^e for any integer e (negative exponents allowed).
Complex i_power(int e);

// Small dense-matrix predicates used throughout the test suites.
bool is_hermitian(const Matrix& a, double tol);
bool is_unitary(const Matrix& a, double tol);
double max_abs(const Matrix& a);

}  // namespace colltomo
