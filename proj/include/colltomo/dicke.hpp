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

#include <map>

#include "colltomo/binary_pauli.hpp"
#include "colltomo/phase_space.hpp"

namespace colltomo {

// Tomography restricted to the fully symmetric (Dicke) subspace. States are
// handled as (N+1)-component vectors / (N+1)x(N+1) matrices in the Dicke
// basis; `embed_*` maps them into the full 2^N space.

/// The Dicke state |ell, N> as a 2^N vector: the equal-amplitude
/// superposition of all weight-ell basis states.
Vector dicke_basis_vector(int n_qubits, int ell,
                          int qubit_cap = kDefaultQubitCap);

/// Projector onto the (N+1)-dimensional symmetric subspace.
Matrix symmetric_projector(int n_qubits, int qubit_cap = kDefaultQubitCap);

/// Lifts Dicke-basis coefficients c_ell into the 2^N space.
Vector embed_dicke(const Vector& coeffs, int n_qubits);

/// Dicke-basis components <ell, N|v> of a 2^N vector.
Vector project_to_dicke(const Vector& v, int n_qubits);

/**
 * The unnormalized symmetric projection Psi_mnk of a discrete coherent state
 * whose labels have weights (m, n, k):
 * c_ell = (1+|xi|^2)^{-N/2} binom(N, ell)^{-1/2} psi_ell(m, n, k; xi).
 */
Vector build_psi(int n_qubits, const HammingTriple& t, Complex xi);

/// One POVM element: the unnormalized state, its squared norm and the fiber
/// size R_mnk. The element itself is R |Psi><Psi|.
struct PovmElement {
  Vector psi;  // unnormalized, Dicke basis
  double norm_sq = 0.0;
  std::int64_t weight = 0;
};

struct PovmElementTable {
  int n_qubits = 0;
  Complex xi;
  std::map<HammingTriple, PovmElement> elements;
};

/// Full POVM table; satisfies sum_t R_t |Psi_t><Psi_t| = 2^N on the Dicke
/// space, and carries at most N distinct squared norms.
PovmElementTable build_povm(int n_qubits, Complex xi,
                            int qubit_cap = kDefaultQubitCap);

/**
 * The operator A_mnk on the Dicke space, with matrix elements
 * f_{ll'}(m, k, n) / sqrt(binom(N,l) binom(N,l')). These are (up to
 * transposition) the symmetric projections of the Pauli monomials and carry
 * the whole operator content of the dual symmetric kernel.
 */
Matrix build_A(int n_qubits, const HammingTriple& t);

/**
 * The dual reconstruction kernel K_mnk on the Dicke space:
 * the g-expansion 2^{-2N} sum_t' 3^{|t'|/4} i^{(k'-m'-n')/2} g_t'(t) A_t'
 * scaled by the squared norm of Psi_mnk, so that
 * rho = sum_t p_t R_t K_t holds with normalized projection probabilities.
 * Requires the default fiducial parameter.
 */
Matrix build_K(int n_qubits, const HammingTriple& t, Complex xi);

/// p_t = <Psi_t|rho|Psi_t> / N_t^2 for every admissible triple.
std::map<HammingTriple, double> measure_probabilities(
    const Matrix& rho_sym, const PovmElementTable& povm);

/// rho = sum_t p_t R_t K_t; exact for any symmetric density matrix.
Matrix reconstruct_symmetric(const std::map<HammingTriple, double>& probs,
                             int n_qubits, Complex xi);

/// The probability-constraint matrix: Omega p = p for the probability vector
/// of any symmetric state. Rows and columns follow enumerate_triples order.
Eigen::MatrixXd build_omega(int n_qubits, Complex xi);

struct OmegaRankReport {
  int n_qubits = 0;
  int table_size = 0;         // binom(N+3, 3)
  int rank = 0;               // numerical rank of (Omega - I)
  int independent_count = 0;  // table_size - rank - 1
};

/// Numerical rank of (Omega - I): singular values above
/// rel_threshold * max(sigma_max, 1) count. The rank is N(N^2-1)/6, leaving
/// N^2 + 2N independent projections after normalization.
OmegaRankReport omega_rank_report(int n_qubits, Complex xi,
                                  double rel_threshold = 1e-8);

}  // namespace colltomo
