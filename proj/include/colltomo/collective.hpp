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

/// Q-function mass binned by Hamming-weight triple.
struct ProjectedQTable {
  int n_qubits = 0;
  std::map<HammingTriple, double> values;
};

/// Expectation values <F_mnk> of the collective operator family.
struct CollectiveExpectations {
  int n_qubits = 0;
  std::map<HammingTriple, Complex> values;
};

/// Physicality thresholds for density-matrix inputs.
struct DensityCheck {
  double hermiticity_tol = 1e-10;
  double trace_tol = 1e-8;
  double eigenvalue_floor = -1e-8;
  bool warn_only = false;
};

/// Throws ValidationError (or returns quietly when warn_only) if rho is not
/// a density matrix within the thresholds.
void validate_density(const Matrix& rho, const DensityCheck& check = {});

/// Bins a Q symbol into the admissible weight triples.
ProjectedQTable project_q(const PhaseSpaceSymbol& symbol);

/// Spreads a projected table back over phase space: the lifted value at
/// (alpha, beta) is the table entry of its weight triple divided by R_mnk.
PhaseSpaceSymbol lift_q(const ProjectedQTable& table);

/**
 * The collective operator F_mnk: the sum of (-i)^{mu.lambda} Z_mu X_lambda
 * over all pairs with weights (m, n, k). Hermitian, with
 * Tr(F_t F_t') = 2^N R_t delta_{tt'}. F_000 is the identity and F_101 the
 * total spin S_z.
 */
Matrix build_F(int n_qubits, const HammingTriple& t,
               int qubit_cap = kDefaultQubitCap);

/// <F_mnk> = Tr(rho F_mnk) for every admissible triple.
CollectiveExpectations collective_expectations(
    const Matrix& rho, const DensityCheck& check = {});

/// rho_rec = 2^{-N} sum_t R_t^{-1} <F_t> F_t: the orthogonal projection of
/// rho onto the span of the collective operators. Exact on permutation
/// invariant states.
Matrix reconstruct_collective(const CollectiveExpectations& exps);

/**
 * The weight-triple fiber sum of Delta^(s), evaluated through the g-function
 * expansion sum_t' g_mnk(t') 3^{+-|t'|/4} F_t'. Only defined for the default
 * fiducial parameter, whose monomial overlaps are exactly the powers
 * 3^{-|t'|/4} up to a phase.
 */
Matrix kernel_symmetric(int s, int n_qubits, const HammingTriple& t,
                        const FiducialState& fid);

/// <psi| rho |psi>, clamped into [0, 1] against rounding.
double fidelity(const Matrix& rho, const Vector& psi);

/// Unitary matrix swapping qubits i and j (0-based) on N qubits.
Matrix transposition_matrix(int n_qubits, int qubit_i, int qubit_j);

/// Eigenprojectors of the total spin square S^2, one per eigenvalue cluster.
std::vector<Matrix> total_spin_projectors(int n_qubits,
                                          double cluster_tol = 1e-8);

// ---------------------------------------------------------------------------
// Two- and three-qubit case studies.

/// Parameters of an arbitrary pure two-qubit state, split into its
/// antisymmetric and symmetric components.
struct ParamState2Q {
  double theta = 0.0;
  double beta = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

Vector state_2q(const ParamState2Q& p);

/// Fidelity of the collective reconstruction of the 2-qubit family;
/// equal to (3 + cos(4 theta)) / 4.
double fidelity_2q_formula(double theta);

/// Parameters of an arbitrary pure three-qubit state: weights over the
/// symmetric subspace and the two spin-1/2 subspaces, plus the inner
/// parameters of the three component states.
struct ParamState3Q {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  // symmetric component
  double theta1 = 0.0;
  double beta1 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  // spin-1/2 components
  double theta2 = 0.0;
  double beta2 = 0.0;
  double theta3 = 0.0;
  double beta3 = 0.0;
};

Vector state_3q(const ParamState3Q& p);

/// Orthonormal basis vectors of the two spin-1/2 subspaces of three qubits,
/// ordered (m = +1/2, m = -1/2) within each copy.
struct ThreeQubitHalfSpinBases {
  Vector copy1_up, copy1_down, copy2_up, copy2_down;
};

const ThreeQubitHalfSpinBases& three_qubit_half_spin_bases();

/// The common 2x2 block of the reconstructed three-qubit state, without the
/// cos^2(theta)/2 weight.
Eigen::Matrix2cd rho2_block_formula(const ParamState3Q& p);

/**
 * Block-resolved fidelity between rho and its collective reconstruction for
 * three qubits: within each SU(2) sector the multiplicity copies are summed
 * out of both states and the overlap of the collapsed blocks is taken,
 * weighted by the true sector weights. Collective measurements determine
 * exactly the collapsed blocks, so this measures how the state is
 * distributed across the sectors.
 */
double block_fidelity_3q(const Matrix& rho, const Matrix& rho_rec);

/**
 * block_fidelity_3q averaged over midpoint grids of the spin-1/2 inner
 * parameters (theta2, beta2, theta3, beta3) at fixed sector weights
 * (theta, alpha), running the full measurement pipeline per draw.
 * Converges to sin^2(theta) + (3/4 + cos^2(2 alpha)/4) cos^2(theta).
 */
double avg_fidelity_3q(double theta, double alpha, int grid_points = 16);

/// The closed-form value the average converges to.
double avg_fidelity_3q_formula(double theta, double alpha);

}  // namespace colltomo
