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

#include "colltomo/phase_space.hpp"

#include <cmath>
#include <string>

namespace colltomo {

namespace {

int parity(std::uint32_t bits) { return std::popcount(bits) & 1; }

std::string point_name(std::uint32_t gamma, std::uint32_t delta) {
  return "(gamma=" + std::to_string(gamma) +
         ", delta=" + std::to_string(delta) + ")";
}

}  // namespace

Complex default_xi() {
  const double r = (std::sqrt(3.0) - 1.0) / std::sqrt(2.0);
  return r * std::exp(Complex(0.0, M_PI / 4.0));
}

FiducialState::FiducialState(int n_qubits, Complex xi, int qubit_cap)
    : n_(n_qubits), xi_(xi) {
  if (n_qubits < 1) {
    throw DomainError("FiducialState: N must be >= 1");
  }
  if (n_qubits > qubit_cap) {
    throw CapacityError("FiducialState: " + std::to_string(n_qubits) +
                        " qubits exceeds cap " + std::to_string(qubit_cap));
  }
  const double norm2 = 1.0 + std::norm(xi);
  // Single-qubit overlaps with the three nontrivial monomials. The modulus
  // of an N-qubit overlap is a product of these, so the smallest achievable
  // modulus is min(...)^N.
  const double oz = std::abs((1.0 - std::norm(xi)) / norm2);
  const double ox = std::abs(2.0 * xi.real() / norm2);
  const double oy = std::abs(2.0 * xi.imag() / norm2);
  const double floor_single = std::min({oz, ox, oy});
  if (std::pow(floor_single, n_qubits) < kFiducialOverlapFloor) {
    throw SingularFiducialError(
        "FiducialState: xi yields a monomial overlap below " +
        std::to_string(kFiducialOverlapFloor) +
        "; the dual kernel would be singular");
  }
  const std::uint32_t dim = 1u << n_qubits;
  amp_.resize(dim);
  const double scale = std::pow(norm2, -0.5 * n_qubits);
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    Complex value(scale, 0.0);
    for (int i = 0; i < std::popcount(kappa); ++i) {
      value *= xi;
    }
    amp_[kappa] = value;
  }
}

bool FiducialState::has_default_xi() const {
  return std::abs(xi_ - default_xi()) < 1e-12;
}

Complex FiducialState::monomial_overlap(const BinaryTuple& gamma,
                                        const BinaryTuple& delta) const {
  if (gamma.n_qubits() != n_ || delta.n_qubits() != n_) {
    throw DimensionError("monomial_overlap: qubit count mismatch");
  }
  const std::uint32_t dim = 1u << n_;
  Complex sum(0.0, 0.0);
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    const std::uint32_t row = kappa ^ delta.index();
    const double sign = parity(gamma.index() & row) ? -1.0 : 1.0;
    sum += std::conj(amp_[row]) * sign * amp_[kappa];
  }
  return sum;
}

Vector coherent_state(const BinaryTuple& alpha, const BinaryTuple& beta,
                      const FiducialState& fid) {
  const int n = fid.n_qubits();
  if (alpha.n_qubits() != n || beta.n_qubits() != n) {
    throw DimensionError("coherent_state: qubit count mismatch");
  }
  const std::uint32_t dim = 1u << n;
  Vector v(dim);
  const Vector& amp = fid.amplitudes();
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    const double sign = parity(alpha.index() & kappa) ? -1.0 : 1.0;
    v[kappa] = sign * amp[kappa ^ beta.index()];
  }
  return v;
}

namespace {

// Coefficient of Z_gamma X_delta in Delta^(s)(alpha, beta), without the
// 2^{-N(s+3)/2} prefactor.
Complex kernel_coefficient(int s, std::uint32_t alpha, std::uint32_t beta,
                           std::uint32_t gamma, std::uint32_t delta,
                           Complex overlap) {
  int sign_bits = parity(alpha & delta) ^ parity(beta & gamma);
  if (s == -1) {
    sign_bits ^= parity(gamma & delta);
  }
  const double sign = sign_bits ? -1.0 : 1.0;
  if (s == 1) {
    if (std::abs(overlap) < kFiducialOverlapFloor) {
      throw SingularFiducialError(
          "kernel: fiducial overlap vanishes at " + point_name(gamma, delta));
    }
    return sign / overlap;
  }
  return sign * overlap;
}

void check_s(int s) {
  if (s != 1 && s != -1) {
    throw DomainError("kernel: s must be +1 or -1");
  }
}

}  // namespace

Matrix kernel(int s, const BinaryTuple& alpha, const BinaryTuple& beta,
              const FiducialState& fid) {
  check_s(s);
  const int n = fid.n_qubits();
  if (alpha.n_qubits() != n || beta.n_qubits() != n) {
    throw DimensionError("kernel: qubit count mismatch");
  }
  const std::uint32_t dim = 1u << n;
  const double prefactor = std::pow(2.0, -0.5 * n * (s + 3));
  Matrix result = Matrix::Zero(dim, dim);
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      const Complex overlap = fid.monomial_overlap(BinaryTuple(gamma, n),
                                                   BinaryTuple(delta, n));
      const Complex coeff =
          prefactor * kernel_coefficient(s, alpha.index(), beta.index(),
                                         gamma, delta, overlap);
      for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
        const std::uint32_t row = kappa ^ delta;
        const double sign = parity(gamma & row) ? -1.0 : 1.0;
        result(row, kappa) += coeff * sign;
      }
    }
  }
  return result;
}

namespace {

// Tr[A Z_gamma X_delta] and the fiducial overlap, for every (gamma, delta).
struct MonomialData {
  Eigen::MatrixXcd trace;    // (gamma, delta) -> Tr[A M]
  Eigen::MatrixXcd overlap;  // (gamma, delta) -> <xi|M|xi>
};

MonomialData monomial_data(const Matrix& a, const FiducialState& fid) {
  const int n = fid.n_qubits();
  const std::uint32_t dim = 1u << n;
  if (a.rows() != dim || a.cols() != dim) {
    throw DimensionError("phase-space symbol: operator dimension mismatch");
  }
  MonomialData out;
  out.trace.resize(dim, dim);
  out.overlap.resize(dim, dim);
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      Complex tr(0.0, 0.0);
      for (std::uint32_t r = 0; r < dim; ++r) {
        const double sign = parity(gamma & (r ^ delta)) ? -1.0 : 1.0;
        tr += a(r, r ^ delta) * sign;
      }
      out.trace(gamma, delta) = tr;
      out.overlap(gamma, delta) = fid.monomial_overlap(BinaryTuple(gamma, n),
                                                       BinaryTuple(delta, n));
    }
  }
  return out;
}

PhaseSpaceSymbol symbol_from_weights(PhaseSpaceSymbol::Kind kind, int n,
                                     double prefactor,
                                     const Eigen::MatrixXcd& weights) {
  const std::uint32_t dim = 1u << n;
  PhaseSpaceSymbol sym{kind, n, Eigen::MatrixXcd(dim, dim)};
  for (std::uint32_t alpha = 0; alpha < dim; ++alpha) {
    for (std::uint32_t beta = 0; beta < dim; ++beta) {
      Complex sum(0.0, 0.0);
      for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
        for (std::uint32_t delta = 0; delta < dim; ++delta) {
          const double sign =
              (parity(alpha & delta) ^ parity(beta & gamma)) ? -1.0 : 1.0;
          sum += sign * weights(gamma, delta);
        }
      }
      sym.values(alpha, beta) = prefactor * sum;
    }
  }
  return sym;
}

}  // namespace

PhaseSpaceSymbol q_symbol(const Matrix& a, const FiducialState& fid) {
  const int n = fid.n_qubits();
  const std::uint32_t dim = 1u << n;
  const MonomialData data = monomial_data(a, fid);
  Eigen::MatrixXcd weights(dim, dim);
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      const double sign = parity(gamma & delta) ? -1.0 : 1.0;
      weights(gamma, delta) =
          sign * data.overlap(gamma, delta) * data.trace(gamma, delta);
    }
  }
  return symbol_from_weights(PhaseSpaceSymbol::Kind::Q, n,
                             std::pow(2.0, -n), weights);
}

PhaseSpaceSymbol p_symbol(const Matrix& a, const FiducialState& fid) {
  const int n = fid.n_qubits();
  const std::uint32_t dim = 1u << n;
  const MonomialData data = monomial_data(a, fid);
  Eigen::MatrixXcd weights(dim, dim);
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      const Complex overlap = data.overlap(gamma, delta);
      if (std::abs(overlap) < kFiducialOverlapFloor) {
        throw SingularFiducialError("p_symbol: fiducial overlap vanishes at " +
                                    point_name(gamma, delta));
      }
      weights(gamma, delta) = data.trace(gamma, delta) / overlap;
    }
  }
  return symbol_from_weights(PhaseSpaceSymbol::Kind::P, n,
                             std::pow(2.0, -2.0 * n), weights);
}

Matrix reconstruct_from_q(const PhaseSpaceSymbol& q, const FiducialState& fid) {
  if (q.kind != PhaseSpaceSymbol::Kind::Q) {
    throw DomainError("reconstruct_from_q: symbol must be of Q kind");
  }
  const int n = fid.n_qubits();
  if (q.n_qubits != n) {
    throw DimensionError("reconstruct_from_q: qubit count mismatch");
  }
  const std::uint32_t dim = 1u << n;
  const double prefactor = std::pow(2.0, -2.0 * n);
  Matrix result = Matrix::Zero(dim, dim);
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      Complex sum(0.0, 0.0);
      for (std::uint32_t alpha = 0; alpha < dim; ++alpha) {
        for (std::uint32_t beta = 0; beta < dim; ++beta) {
          const double sign =
              (parity(alpha & delta) ^ parity(beta & gamma)) ? -1.0 : 1.0;
          sum += sign * q.values(alpha, beta);
        }
      }
      const Complex overlap = fid.monomial_overlap(BinaryTuple(gamma, n),
                                                   BinaryTuple(delta, n));
      if (std::abs(overlap) < kFiducialOverlapFloor) {
        throw SingularFiducialError(
            "reconstruct_from_q: fiducial overlap vanishes at " +
            point_name(gamma, delta));
      }
      const Complex coeff = prefactor * sum / overlap;
      for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
        const std::uint32_t row = kappa ^ delta;
        const double sign = parity(gamma & row) ? -1.0 : 1.0;
        result(row, kappa) += coeff * sign;
      }
    }
  }
  return result;
}

Matrix reconstruct_full(const Matrix& a, const FiducialState& fid) {
  return reconstruct_from_q(q_symbol(a, fid), fid);
}

}  // namespace colltomo
