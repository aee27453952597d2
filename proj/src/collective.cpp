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

#include "colltomo/collective.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "colltomo/special_fn.hpp"

namespace colltomo {

namespace {

int parity(std::uint32_t bits) { return std::popcount(bits) & 1; }

std::string triple_name(const HammingTriple& t) {
  std::ostringstream os;
  os << "(" << t.m << "," << t.n << "," << t.k << ")";
  return os.str();
}

}  // namespace

void validate_density(const Matrix& rho, const DensityCheck& check) {
  std::string problem;
  if (rho.rows() != rho.cols()) {
    problem = "matrix is not square";
  } else if (!is_hermitian(rho, check.hermiticity_tol)) {
    problem = "matrix is not Hermitian";
  } else if (std::abs(rho.trace() - Complex(1.0, 0.0)) > check.trace_tol) {
    problem = "trace differs from 1";
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho,
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < check.eigenvalue_floor) {
      problem = "matrix has a negative eigenvalue";
    }
  }
  if (problem.empty()) {
    return;
  }
  if (check.warn_only) {
    std::cerr << "warning: input is not a density matrix: " << problem
              << "\n";
    return;
  }
  throw ValidationError("validate_density: " + problem);
}

ProjectedQTable project_q(const PhaseSpaceSymbol& symbol) {
  if (symbol.kind != PhaseSpaceSymbol::Kind::Q) {
    throw DomainError("project_q: symbol must be of Q kind");
  }
  const int n = symbol.n_qubits;
  const std::uint32_t dim = 1u << n;
  ProjectedQTable table;
  table.n_qubits = n;
  for (const HammingTriple& t : enumerate_triples(n)) {
    table.values[t] = 0.0;
  }
  for (std::uint32_t alpha = 0; alpha < dim; ++alpha) {
    for (std::uint32_t beta = 0; beta < dim; ++beta) {
      const HammingTriple t{std::popcount(alpha), std::popcount(beta),
                            std::popcount(alpha ^ beta)};
      table.values[t] += symbol.values(alpha, beta).real();
    }
  }
  return table;
}

PhaseSpaceSymbol lift_q(const ProjectedQTable& table) {
  const int n = table.n_qubits;
  const std::uint32_t dim = 1u << n;
  std::string missing;
  for (const HammingTriple& t : enumerate_triples(n)) {
    if (!table.values.count(t)) {
      missing += (missing.empty() ? "" : ", ") + triple_name(t);
    }
  }
  if (!missing.empty()) {
    throw IncompleteDataError("lift_q: missing triples " + missing);
  }
  for (const auto& [t, value] : table.values) {
    if (!admissible(n, t)) {
      throw DomainError("lift_q: inadmissible triple " + triple_name(t));
    }
  }
  PhaseSpaceSymbol sym{PhaseSpaceSymbol::Kind::Q, n,
                       Eigen::MatrixXcd(dim, dim)};
  for (std::uint32_t alpha = 0; alpha < dim; ++alpha) {
    for (std::uint32_t beta = 0; beta < dim; ++beta) {
      const HammingTriple t{std::popcount(alpha), std::popcount(beta),
                            std::popcount(alpha ^ beta)};
      sym.values(alpha, beta) =
          table.values.at(t) / static_cast<double>(r_mnk(n, t));
    }
  }
  return sym;
}

Matrix build_F(int n_qubits, const HammingTriple& t, int qubit_cap) {
  if (n_qubits > qubit_cap) {
    throw CapacityError("build_F: qubit count exceeds cap");
  }
  if (!admissible(n_qubits, t)) {
    throw DomainError("build_F: inadmissible triple " + triple_name(t));
  }
  const std::uint32_t dim = 1u << n_qubits;
  Matrix f = Matrix::Zero(dim, dim);
  for (std::uint32_t mu = 0; mu < dim; ++mu) {
    if (std::popcount(mu) != t.m) {
      continue;
    }
    for (std::uint32_t lambda = 0; lambda < dim; ++lambda) {
      if (std::popcount(lambda) != t.n ||
          std::popcount(mu ^ lambda) != t.k) {
        continue;
      }
      const Complex phase = i_power(-std::popcount(mu & lambda));
      for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
        const std::uint32_t row = kappa ^ lambda;
        f(row, kappa) += parity(mu & row) ? -phase : phase;
      }
    }
  }
  return f;
}

CollectiveExpectations collective_expectations(const Matrix& rho,
                                               const DensityCheck& check) {
  validate_density(rho, check);
  const auto dim = rho.rows();
  const int n = std::bit_width(static_cast<std::uint64_t>(dim)) - 1;
  if ((1LL << n) != dim) {
    throw DimensionError("collective_expectations: dimension not 2^N");
  }
  CollectiveExpectations exps;
  exps.n_qubits = n;
  // TODO: memoize the F family per N like the g/f/psi tables; repeated
  // sweeps rebuild it on every call.
  for (const HammingTriple& t : enumerate_triples(n)) {
    exps.values[t] = (rho * build_F(n, t)).trace();
  }
  return exps;
}

Matrix reconstruct_collective(const CollectiveExpectations& exps) {
  const int n = exps.n_qubits;
  const std::uint32_t dim = 1u << n;
  Matrix rho = Matrix::Zero(dim, dim);
  std::string missing;
  for (const HammingTriple& t : enumerate_triples(n)) {
    const auto it = exps.values.find(t);
    if (it == exps.values.end()) {
      missing += (missing.empty() ? "" : ", ") + triple_name(t);
      continue;
    }
    rho += (it->second / static_cast<double>(r_mnk(n, t))) * build_F(n, t);
  }
  if (!missing.empty()) {
    throw IncompleteDataError("reconstruct_collective: missing triples " +
                              missing);
  }
  return rho / std::pow(2.0, n);
}

Matrix kernel_symmetric(int s, int n_qubits, const HammingTriple& t,
                        const FiducialState& fid) {
  if (s != 1 && s != -1) {
    throw DomainError("kernel_symmetric: s must be +1 or -1");
  }
  if (!admissible(n_qubits, t)) {
    throw DomainError("kernel_symmetric: inadmissible triple " +
                      triple_name(t));
  }
  if (fid.n_qubits() != n_qubits) {
    throw DimensionError("kernel_symmetric: qubit count mismatch");
  }
  if (!fid.has_default_xi()) {
    // The 3^{|t|/4} coefficients below are the monomial overlaps of the
    // standard fiducial state; no expansion is known for other xi.
    throw UnsupportedFiducialError(
        "kernel_symmetric: only the default fiducial parameter is supported");
  }
  const std::uint32_t dim = 1u << n_qubits;
  const GTable& g = g_table(n_qubits);
  Matrix result = Matrix::Zero(dim, dim);
  for (const HammingTriple& tp : g.triples()) {
    const double power = std::pow(3.0, 0.25 * s * tp.sum());
    result += static_cast<double>(g.value(t, tp)) * power *
              build_F(n_qubits, tp);
  }
  return result * std::pow(2.0, -0.5 * n_qubits * (3 + s));
}

double fidelity(const Matrix& rho, const Vector& psi) {
  if (rho.rows() != psi.size() || rho.cols() != psi.size()) {
    throw DimensionError("fidelity: dimension mismatch");
  }
  double value = (psi.adjoint() * rho * psi).value().real();
  if (value < 0.0 && value > -1e-12) {
    value = 0.0;
  }
  if (value > 1.0 && value < 1.0 + 1e-12) {
    value = 1.0;
  }
  return value;
}

Matrix transposition_matrix(int n_qubits, int qubit_i, int qubit_j) {
  if (qubit_i < 0 || qubit_j < 0 || qubit_i >= n_qubits ||
      qubit_j >= n_qubits) {
    throw DomainError("transposition_matrix: qubit index out of range");
  }
  const std::uint32_t dim = 1u << n_qubits;
  const int bi = n_qubits - 1 - qubit_i;
  const int bj = n_qubits - 1 - qubit_j;
  Matrix p = Matrix::Zero(dim, dim);
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    std::uint32_t swapped = kappa;
    const std::uint32_t vi = (kappa >> bi) & 1u;
    const std::uint32_t vj = (kappa >> bj) & 1u;
    if (vi != vj) {
      swapped ^= (1u << bi) | (1u << bj);
    }
    p(swapped, kappa) = 1.0;
  }
  return p;
}

namespace {

Matrix single_qubit_op(int n_qubits, int qubit, const Eigen::Matrix2cd& op) {
  const std::uint32_t dim = 1u << n_qubits;
  const int bit = n_qubits - 1 - qubit;
  Matrix out = Matrix::Zero(dim, dim);
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    const std::uint32_t value = (kappa >> bit) & 1u;
    for (std::uint32_t target = 0; target < 2; ++target) {
      const std::uint32_t row = (kappa & ~(1u << bit)) | (target << bit);
      out(row, kappa) += op(target, value);
    }
  }
  return out;
}

}  // namespace

std::vector<Matrix> total_spin_projectors(int n_qubits, double cluster_tol) {
  const std::uint32_t dim = 1u << n_qubits;
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  Matrix total_sq = Matrix::Zero(dim, dim);
  for (const auto& op : {sx, sy, sz}) {
    Matrix component = Matrix::Zero(dim, dim);
    for (int q = 0; q < n_qubits; ++q) {
      component += single_qubit_op(n_qubits, q, op);
    }
    total_sq += component * component;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(total_sq);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  std::vector<Matrix> projectors;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= evals.size(); ++i) {
    if (i == evals.size() || evals[i] - evals[start] > cluster_tol) {
      const auto block = evecs.middleCols(start, i - start);
      projectors.push_back(block * block.adjoint());
      start = i;
    }
  }
  return projectors;
}

// ---------------------------------------------------------------------------
// Case studies.

Vector state_2q(const ParamState2Q& p) {
  Vector anti = Vector::Zero(4);
  anti[1] = 1.0 / std::sqrt(2.0);
  anti[2] = -1.0 / std::sqrt(2.0);
  Vector sym = Vector::Zero(4);
  sym[0] = std::sin(p.alpha1);
  const Complex mid = std::exp(Complex(0, p.gamma1)) * std::cos(p.alpha1) *
                      std::sin(p.alpha2) / std::sqrt(2.0);
  sym[1] = mid;
  sym[2] = mid;
  sym[3] = std::exp(Complex(0, p.gamma2)) * std::cos(p.alpha1) *
           std::cos(p.alpha2);
  return std::sin(p.theta) * anti +
         std::exp(Complex(0, p.beta)) * std::cos(p.theta) * sym;
}

double fidelity_2q_formula(double theta) {
  return 0.25 * (3.0 + std::cos(4.0 * theta));
}

namespace {

Vector sym_state_3q(const ParamState3Q& p) {
  // Hyperspherical weights over the four Dicke components.
  Vector v = Vector::Zero(8);
  const double c1 = std::cos(p.theta1);
  v[0b000] = std::sin(p.theta1);
  const Complex w1 = std::exp(Complex(0, p.beta1)) * c1 * std::sin(p.alpha1) /
                     std::sqrt(3.0);
  v[0b100] = w1;
  v[0b010] = w1;
  v[0b001] = w1;
  const Complex w2 = std::exp(Complex(0, p.gamma1)) * c1 *
                     std::cos(p.alpha1) * std::sin(p.alpha2) / std::sqrt(3.0);
  v[0b110] = w2;
  v[0b101] = w2;
  v[0b011] = w2;
  v[0b111] = std::exp(Complex(0, p.gamma2)) * c1 * std::cos(p.alpha1) *
             std::cos(p.alpha2);
  return v;
}

Vector half_state(const Vector& up, const Vector& down, double theta,
                  double beta) {
  return std::sin(theta) * up +
         std::exp(Complex(0, beta)) * std::cos(theta) * down;
}

}  // namespace

const ThreeQubitHalfSpinBases& three_qubit_half_spin_bases() {
  static const ThreeQubitHalfSpinBases bases = [] {
    ThreeQubitHalfSpinBases b;
    const double s6 = std::sqrt(6.0);
    const double s2 = std::sqrt(2.0);
    b.copy1_up = Vector::Zero(8);
    b.copy1_up[0b100] = 2.0 / s6;
    b.copy1_up[0b010] = -1.0 / s6;
    b.copy1_up[0b001] = -1.0 / s6;
    b.copy1_down = Vector::Zero(8);
    b.copy1_down[0b101] = 1.0 / s6;
    b.copy1_down[0b011] = -2.0 / s6;
    b.copy1_down[0b110] = 1.0 / s6;
    b.copy2_up = Vector::Zero(8);
    b.copy2_up[0b001] = 1.0 / s2;
    b.copy2_up[0b010] = -1.0 / s2;
    b.copy2_down = Vector::Zero(8);
    b.copy2_down[0b101] = 1.0 / s2;
    b.copy2_down[0b110] = -1.0 / s2;
    return b;
  }();
  return bases;
}

Vector state_3q(const ParamState3Q& p) {
  const auto& bases = three_qubit_half_spin_bases();
  const Vector psi1 =
      half_state(bases.copy1_up, bases.copy1_down, p.theta2, p.beta2);
  const Vector psi2 =
      half_state(bases.copy2_up, bases.copy2_down, p.theta3, p.beta3);
  return std::sin(p.theta) * sym_state_3q(p) +
         std::exp(Complex(0, p.beta)) * std::cos(p.theta) *
             std::sin(p.alpha) * psi1 +
         std::exp(Complex(0, p.gamma)) * std::cos(p.theta) *
             std::cos(p.alpha) * psi2;
}

Eigen::Matrix2cd rho2_block_formula(const ParamState3Q& p) {
  const double sa2 = std::sin(p.alpha) * std::sin(p.alpha);
  const double ca2 = std::cos(p.alpha) * std::cos(p.alpha);
  const double s2 = std::sin(p.theta2), c2 = std::cos(p.theta2);
  const double s3 = std::sin(p.theta3), c3 = std::cos(p.theta3);
  const Complex off =
      0.5 * (std::exp(Complex(0, -p.beta2)) * sa2 * std::sin(2.0 * p.theta2) +
             std::exp(Complex(0, -p.beta3)) * ca2 * std::sin(2.0 * p.theta3));
  Eigen::Matrix2cd rho2;
  rho2 << sa2 * s2 * s2 + ca2 * s3 * s3, off,  //
      std::conj(off), ca2 * c3 * c3 + sa2 * c2 * c2;
  return rho2;
}

namespace {

// Dicke states of three qubits, weight 0..3.
std::array<Vector, 4> dicke_vectors_3q() {
  std::array<Vector, 4> d;
  for (auto& v : d) {
    v = Vector::Zero(8);
  }
  d[0][0b000] = 1.0;
  const double s3 = 1.0 / std::sqrt(3.0);
  d[1][0b100] = s3;
  d[1][0b010] = s3;
  d[1][0b001] = s3;
  d[2][0b110] = s3;
  d[2][0b101] = s3;
  d[2][0b011] = s3;
  d[3][0b111] = 1.0;
  return d;
}

// Multiplicity-summed sector blocks of a 3-qubit operator: a 4x4 block on
// the symmetric sector and a 2x2 block summed over the two spin-1/2 copies.
struct CollapsedBlocks {
  Eigen::Matrix4cd sym;
  Eigen::Matrix2cd half;
};

CollapsedBlocks collapse_3q(const Matrix& op) {
  const auto d = dicke_vectors_3q();
  const auto& b = three_qubit_half_spin_bases();
  CollapsedBlocks out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.sym(i, j) = (d[i].adjoint() * op * d[j]).value();
    }
  }
  const Vector* copy1[2] = {&b.copy1_up, &b.copy1_down};
  const Vector* copy2[2] = {&b.copy2_up, &b.copy2_down};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.half(i, j) = (copy1[i]->adjoint() * op * (*copy1[j])).value() +
                       (copy2[i]->adjoint() * op * (*copy2[j])).value();
    }
  }
  return out;
}

// Same blocks for a pure state |psi><psi| without forming the 8x8 matrix.
CollapsedBlocks collapse_3q_state(const Vector& psi) {
  const auto d = dicke_vectors_3q();
  const auto& b = three_qubit_half_spin_bases();
  Eigen::Vector4cd s;
  for (int i = 0; i < 4; ++i) {
    s(i) = d[i].dot(psi);
  }
  Eigen::Vector2cd h1, h2;
  h1 << b.copy1_up.dot(psi), b.copy1_down.dot(psi);
  h2 << b.copy2_up.dot(psi), b.copy2_down.dot(psi);
  CollapsedBlocks out;
  out.sym = s * s.adjoint();
  out.half = h1 * h1.adjoint() + h2 * h2.adjoint();
  return out;
}

double sector_overlap(const Eigen::MatrixXcd& truth,
                      const Eigen::MatrixXcd& rec) {
  const double weight = truth.trace().real();
  if (weight < 1e-12) {
    return 0.0;
  }
  return (truth * rec).trace().real() / weight;
}

}  // namespace

double block_fidelity_3q(const Matrix& rho, const Matrix& rho_rec) {
  if (rho.rows() != 8 || rho_rec.rows() != 8) {
    throw DimensionError("block_fidelity_3q: expected 3-qubit operators");
  }
  const CollapsedBlocks truth = collapse_3q(rho);
  const CollapsedBlocks rec = collapse_3q(rho_rec);
  return sector_overlap(truth.sym, rec.sym) +
         sector_overlap(truth.half, rec.half);
}

double avg_fidelity_3q(double theta, double alpha, int grid_points) {
  if (grid_points < 16) {
    throw DomainError("avg_fidelity_3q: need at least 16 grid points per "
                      "averaged parameter");
  }
  const int n = 3;
  const std::vector<HammingTriple> triples = enumerate_triples(n);
  // Orthonormal collective frame: rho_rec = sum_t G_t Tr(G_t rho).
  std::vector<Matrix> frame;
  frame.reserve(triples.size());
  for (const HammingTriple& t : triples) {
    frame.push_back(build_F(n, t) /
                    std::sqrt(std::pow(2.0, n) *
                              static_cast<double>(r_mnk(n, t))));
  }
  std::vector<CollapsedBlocks> frame_blocks;
  frame_blocks.reserve(frame.size());
  for (const Matrix& g : frame) {
    frame_blocks.push_back(collapse_3q(g));
  }

  ParamState3Q p;
  p.theta = theta;
  p.alpha = alpha;
  // Outer phases and the symmetric component are held fixed while the
  // spin-1/2 parameters are averaged.
  p.beta = 0.3;
  p.gamma = 1.7;
  p.theta1 = 0.4;
  p.beta1 = 1.1;
  p.alpha1 = 0.7;
  p.alpha2 = 0.9;
  p.gamma1 = 2.3;
  p.gamma2 = 0.5;

  const int g = grid_points;
  // Midpoint grids integrate the trigonometric averages exactly.
  std::vector<double> angles_half(g), angles_full(g);
  for (int i = 0; i < g; ++i) {
    angles_half[i] = (i + 0.5) * (M_PI / 2.0) / g;
    angles_full[i] = (i + 0.5) * (2.0 * M_PI) / g;
  }

  double sum = 0.0;
  for (int i2 = 0; i2 < g; ++i2) {
    p.theta2 = angles_half[i2];
    for (int j2 = 0; j2 < g; ++j2) {
      p.beta2 = angles_full[j2];
      for (int i3 = 0; i3 < g; ++i3) {
        p.theta3 = angles_half[i3];
        for (int j3 = 0; j3 < g; ++j3) {
          p.beta3 = angles_full[j3];
          const Vector psi = state_3q(p);
          const CollapsedBlocks truth = collapse_3q_state(psi);
          CollapsedBlocks rec;
          rec.sym.setZero();
          rec.half.setZero();
          for (std::size_t t = 0; t < frame.size(); ++t) {
            // Tr(G_t |psi><psi|) = <psi|G_t|psi>
            const Complex e = psi.dot(frame[t] * psi);
            rec.sym += e * frame_blocks[t].sym;
            rec.half += e * frame_blocks[t].half;
          }
          sum += sector_overlap(truth.sym, rec.sym) +
                 sector_overlap(truth.half, rec.half);
        }
      }
    }
  }
  const double draws = static_cast<double>(g) * g * g * g;
  return sum / draws;
}

double avg_fidelity_3q_formula(double theta, double alpha) {
  const double c = std::cos(2.0 * alpha);
  return std::sin(theta) * std::sin(theta) +
         (0.75 + 0.25 * c * c) * std::cos(theta) * std::cos(theta);
}

}  // namespace colltomo
