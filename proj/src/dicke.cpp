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

#include "colltomo/dicke.hpp"

#include <cmath>
#include <string>

#include "colltomo/special_fn.hpp"

namespace colltomo {

namespace {

void require_admissible(int n_qubits, const HammingTriple& t,
                        const char* where) {
  if (!admissible(n_qubits, t)) {
    throw DomainError(std::string(where) + ": inadmissible triple (" +
                      std::to_string(t.m) + "," + std::to_string(t.n) + "," +
                      std::to_string(t.k) + ")");
  }
}

void require_default_xi(Complex xi, const char* where) {
  if (std::abs(xi - default_xi()) > 1e-12) {
    throw UnsupportedFiducialError(
        std::string(where) +
        ": only the default fiducial parameter is supported");
  }
}

}  // namespace

Vector dicke_basis_vector(int n_qubits, int ell, int qubit_cap) {
  if (n_qubits > qubit_cap) {
    throw CapacityError("dicke_basis_vector: qubit count exceeds cap");
  }
  if (ell < 0 || ell > n_qubits) {
    throw DomainError("dicke_basis_vector: ell out of range");
  }
  const std::uint32_t dim = 1u << n_qubits;
  Vector v = Vector::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(
                               binomial(n_qubits, ell)));
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    if (std::popcount(kappa) == ell) {
      v[kappa] = amp;
    }
  }
  return v;
}

Matrix symmetric_projector(int n_qubits, int qubit_cap) {
  const std::uint32_t dim = 1u << n_qubits;
  Matrix p = Matrix::Zero(dim, dim);
  for (int ell = 0; ell <= n_qubits; ++ell) {
    const Vector v = dicke_basis_vector(n_qubits, ell, qubit_cap);
    p += v * v.adjoint();
  }
  return p;
}

Vector embed_dicke(const Vector& coeffs, int n_qubits) {
  if (coeffs.size() != n_qubits + 1) {
    throw DimensionError("embed_dicke: expected N+1 coefficients");
  }
  const std::uint32_t dim = 1u << n_qubits;
  Vector v = Vector::Zero(dim);
  for (int ell = 0; ell <= n_qubits; ++ell) {
    v += coeffs[ell] * dicke_basis_vector(n_qubits, ell);
  }
  return v;
}

Vector project_to_dicke(const Vector& v, int n_qubits) {
  if (v.size() != (1 << n_qubits)) {
    throw DimensionError("project_to_dicke: dimension mismatch");
  }
  Vector coeffs(n_qubits + 1);
  for (int ell = 0; ell <= n_qubits; ++ell) {
    coeffs[ell] = dicke_basis_vector(n_qubits, ell).dot(v);
  }
  return coeffs;
}

Vector build_psi(int n_qubits, const HammingTriple& t, Complex xi) {
  require_admissible(n_qubits, t, "build_psi");
  const PsiTable& table = psi_table(n_qubits, xi);
  const double scale =
      std::pow(1.0 + std::norm(xi), -0.5 * n_qubits);
  Vector coeffs(n_qubits + 1);
  for (int ell = 0; ell <= n_qubits; ++ell) {
    coeffs[ell] = scale * table.value(ell, t) /
                  std::sqrt(static_cast<double>(binomial(n_qubits, ell)));
  }
  return coeffs;
}

PovmElementTable build_povm(int n_qubits, Complex xi, int qubit_cap) {
  if (n_qubits > qubit_cap) {
    throw CapacityError("build_povm: qubit count exceeds cap");
  }
  PovmElementTable table;
  table.n_qubits = n_qubits;
  table.xi = xi;
  for (const HammingTriple& t : enumerate_triples(n_qubits)) {
    PovmElement elem;
    elem.psi = build_psi(n_qubits, t, xi);
    elem.norm_sq = elem.psi.squaredNorm();
    elem.weight = r_mnk(n_qubits, t);
    table.elements.emplace(t, std::move(elem));
  }
  return table;
}

Matrix build_A(int n_qubits, const HammingTriple& t) {
  require_admissible(n_qubits, t, "build_A");
  const FTable& table = f_table(n_qubits);
  const HammingTriple arg{t.m, t.k, t.n};
  if (!admissible(n_qubits, arg)) {
    throw DomainError("build_A: permuted argument triple not admissible");
  }
  Matrix a = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int l = 0; l <= n_qubits; ++l) {
    for (int lp = 0; lp <= n_qubits; ++lp) {
      a(l, lp) = static_cast<double>(table.value(l, lp, arg)) /
                 std::sqrt(static_cast<double>(binomial(n_qubits, l) *
                                               binomial(n_qubits, lp)));
    }
  }
  return a;
}

Matrix build_K(int n_qubits, const HammingTriple& t, Complex xi) {
  require_admissible(n_qubits, t, "build_K");
  require_default_xi(xi, "build_K");
  const GTable& g = g_table(n_qubits);
  Matrix k = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  for (const HammingTriple& tp : g.triples()) {
    const double power = std::pow(3.0, 0.25 * tp.sum());
    const Complex phase = i_power((tp.k - tp.m - tp.n) / 2);
    k += static_cast<double>(g.value(tp, t)) * power * phase *
         build_A(n_qubits, tp);
  }
  k *= std::pow(2.0, -2.0 * n_qubits);
  // Scale by the squared norm of Psi_mnk so the reconstruction weights are
  // the normalized projection probabilities.
  return build_psi(n_qubits, t, xi).squaredNorm() * k;
}

std::map<HammingTriple, double> measure_probabilities(
    const Matrix& rho_sym, const PovmElementTable& povm) {
  const int n = povm.n_qubits;
  if (rho_sym.rows() != n + 1 || rho_sym.cols() != n + 1) {
    throw DimensionError("measure_probabilities: expected (N+1)-dim matrix");
  }
  if (!is_hermitian(rho_sym, 1e-10)) {
    throw ValidationError("measure_probabilities: state is not Hermitian");
  }
  if (std::abs(rho_sym.trace() - Complex(1.0, 0.0)) > 1e-8) {
    throw ValidationError("measure_probabilities: state trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_sym,
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-8) {
    throw ValidationError(
        "measure_probabilities: state has a negative eigenvalue");
  }
  std::map<HammingTriple, double> probs;
  for (const auto& [t, elem] : povm.elements) {
    const double value =
        (elem.psi.adjoint() * rho_sym * elem.psi).value().real() /
        elem.norm_sq;
    probs[t] = value;
  }
  return probs;
}

Matrix reconstruct_symmetric(const std::map<HammingTriple, double>& probs,
                             int n_qubits, Complex xi) {
  require_default_xi(xi, "reconstruct_symmetric");
  Matrix rho = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  std::string missing;
  for (const HammingTriple& t : enumerate_triples(n_qubits)) {
    const auto it = probs.find(t);
    if (it == probs.end()) {
      missing += (missing.empty() ? "" : ", ") + std::to_string(t.m) + "," +
                 std::to_string(t.n) + "," + std::to_string(t.k);
      continue;
    }
    rho += it->second * static_cast<double>(r_mnk(n_qubits, t)) *
           build_K(n_qubits, t, xi);
  }
  if (!missing.empty()) {
    throw IncompleteDataError("reconstruct_symmetric: missing triples [" +
                              missing + "]");
  }
  return rho;
}

Eigen::MatrixXd build_omega(int n_qubits, Complex xi) {
  require_default_xi(xi, "build_omega");
  const std::vector<HammingTriple> triples = enumerate_triples(n_qubits);
  const int size = static_cast<int>(triples.size());
  const PovmElementTable povm = build_povm(n_qubits, xi);
  Eigen::MatrixXd omega(size, size);
  for (int col = 0; col < size; ++col) {
    const Matrix k = build_K(n_qubits, triples[col], xi);
    const double weight = static_cast<double>(r_mnk(n_qubits, triples[col]));
    for (int row = 0; row < size; ++row) {
      const PovmElement& elem = povm.elements.at(triples[row]);
      omega(row, col) = weight *
                        (elem.psi.adjoint() * k * elem.psi).value().real() /
                        elem.norm_sq;
    }
  }
  return omega;
}

OmegaRankReport omega_rank_report(int n_qubits, Complex xi,
                                  double rel_threshold) {
  const Eigen::MatrixXd omega = build_omega(n_qubits, xi);
  const Eigen::MatrixXd deficit =
      omega - Eigen::MatrixXd::Identity(omega.rows(), omega.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(deficit);
  const auto& sv = svd.singularValues();
  // Relative to sigma_max, floored at the matrix scale: when the deficit is
  // numerically zero (every projection independent) the rank must be 0.
  const double cut = rel_threshold * std::max(sv.maxCoeff(), 1.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cut) {
      ++rank;
    }
  }
  OmegaRankReport report;
  report.n_qubits = n_qubits;
  report.table_size = static_cast<int>(omega.rows());
  report.rank = rank;
  report.independent_count = report.table_size - rank - 1;
  return report;
}

}  // namespace colltomo
