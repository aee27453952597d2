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

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

/// Default fiducial parameter: the single-qubit state along (1,1,1)/sqrt(3)
/// on the Bloch sphere.
Complex default_xi();

inline constexpr double kFiducialOverlapFloor = 1e-12;

/**
 * The N-fold tensor power of (|0> + xi|1>)/sqrt(1+|xi|^2). All displaced
 * coherent states and both kernels are generated from it.
 *
 * Construction rejects xi values for which some monomial overlap
 * <xi|Z_gamma X_delta|xi> would fall below kFiducialOverlapFloor in modulus,
 * since the dual kernel divides by these overlaps.
 */
class FiducialState {
 public:
  FiducialState(int n_qubits, Complex xi,
                int qubit_cap = kDefaultQubitCap);

  static FiducialState standard(int n_qubits,
                                int qubit_cap = kDefaultQubitCap) {
    return FiducialState(n_qubits, default_xi(), qubit_cap);
  }

  int n_qubits() const { return n_; }
  Complex xi() const { return xi_; }
  bool has_default_xi() const;

  /// Normalized 2^N amplitude vector; entry kappa is
  /// xi^{h(kappa)} / (1+|xi|^2)^{N/2}.
  const Vector& amplitudes() const { return amp_; }

  /// <xi| Z_gamma X_delta |xi>, evaluated numerically from the amplitudes.
  Complex monomial_overlap(const BinaryTuple& gamma,
                           const BinaryTuple& delta) const;

 private:
  int n_;
  Complex xi_;
  Vector amp_;
};

/// Z_alpha X_beta |xi> with the displacement phase fixed to zero. The overlap
/// with basis state kappa is xi^{h(kappa+beta)} (-1)^{alpha.kappa}
/// / (1+|xi|^2)^{N/2}.
Vector coherent_state(const BinaryTuple& alpha, const BinaryTuple& beta,
                      const FiducialState& fid);

/**
 * The kernel Delta^(s)(alpha, beta), s = +-1:
 *
 *   2^{-N(s+3)/2} sum_{gamma,delta} (-1)^{alpha.delta + beta.gamma
 *       + gamma.delta (1-s)/2} <xi|Z_g X_d|xi>^{-s} Z_g X_d.
 *
 * For s = -1 this equals the coherent-state projector |a,b><a,b|.
 */
Matrix kernel(int s, const BinaryTuple& alpha, const BinaryTuple& beta,
              const FiducialState& fid);

/// Dual phase-space symbols of an operator, one value per point (alpha, beta).
struct PhaseSpaceSymbol {
  enum class Kind { Q, P };

  Kind kind;
  int n_qubits;
  /// values(a, b) with a = alpha.index(), b = beta.index().
  Eigen::MatrixXcd values;
};

/// Q_A(alpha, beta) = <alpha,beta| A |alpha,beta> = Tr[A Delta^(-1)].
PhaseSpaceSymbol q_symbol(const Matrix& a, const FiducialState& fid);

/// P_A(alpha, beta) = Tr[A Delta^(+1)(alpha, beta)].
PhaseSpaceSymbol p_symbol(const Matrix& a, const FiducialState& fid);

/// sum_{alpha,beta} Q(alpha,beta) Delta^(1)(alpha,beta) for a given Q table.
Matrix reconstruct_from_q(const PhaseSpaceSymbol& q, const FiducialState& fid);

/// sum_{alpha,beta} Q_A(alpha,beta) Delta^(1)(alpha,beta); reproduces A.
Matrix reconstruct_full(const Matrix& a, const FiducialState& fid);

}  // namespace colltomo
