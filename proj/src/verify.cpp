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

#include "colltomo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "colltomo/collective.hpp"
#include "colltomo/dicke.hpp"
#include "colltomo/phase_space.hpp"
#include "colltomo/random_states.hpp"
#include "colltomo/special_fn.hpp"

namespace colltomo {

VerifyOptions::VerifyOptions() : xi(default_xi()) {}

namespace {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tolerances = {
      {"census", 0.0},
      {"fiber_sum", 0.0},
      {"r_bruteforce", 0.0},
      {"monomial_unitarity", 0.0},
      {"dot_identity", 0.0},
      {"biorthogonality", 1e-10},
      {"kernel_projector", 1e-10},
      {"completeness", 1e-10},
      {"roundtrip_full", 1e-9},
      {"sic_overlap", 1e-10},
      {"g_equivalence", 0.0},
      {"f_equivalence", 0.0},
      {"psi_equivalence", 1e-12},
      {"g_dual_orthogonality", 0.0},
      {"representative_independence", 1e-12},
      {"f_orthogonality", 1e-10},
      {"f_identifications", 1e-12},
      {"kernel_symmetric_fiber", 1e-9},
      {"collective_roundtrip", 1e-9},
      {"symbol_pairing", 1e-9},
      {"transposition_invariance", 1e-10},
      {"reconstruction_idempotent", 1e-9},
      {"block_diagonal", 1e-10},
      {"psd_floor", 1e-9},
      {"fidelity_2q", 1e-10},
      {"fidelity_3q_blocks", 1e-10},
      {"fidelity_3q_average", 1e-3},
      {"d1s_rank_one", 1e-10},
      {"povm_completeness", 1e-10},
      {"dicke_roundtrip", 1e-9},
      {"omega_constraint", 1e-9},
      {"omega_rank", 0.0},
      {"distinct_norms", 0.0},
      {"module_consistency", 1e-9},
  };
  return tolerances;
}

class Suite {
 public:
  Suite(const VerifyOptions& options) : options_(options) {}

  void add(const std::string& name, double max_error) {
    CheckResult r;
    r.name = name;
    r.n_qubits = options_.n_qubits;
    r.max_error = max_error;
    r.tolerance = tolerance_for(name);
    r.pass = max_error <= r.tolerance;
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double tolerance_for(const std::string& name) const {
    const auto all = options_.tolerance_overrides.find("all");
    if (all != options_.tolerance_overrides.end()) {
      return all->second;
    }
    const auto it = options_.tolerance_overrides.find(name);
    if (it != options_.tolerance_overrides.end()) {
      return it->second;
    }
    return default_tolerances().at(name);
  }

  const VerifyOptions& options_;
  std::vector<CheckResult> results_;
};

// Deterministic sample of phase-space points (alpha, beta).
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_points(
    int n_qubits, std::size_t count, StateSampler& sampler) {
  const std::uint32_t dim = 1u << n_qubits;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  if (static_cast<std::size_t>(dim) * dim <= count) {
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        points.emplace_back(a, b);
      }
    }
    return points;
  }
  for (std::size_t i = 0; i < count; ++i) {
    points.emplace_back(
        static_cast<std::uint32_t>(sampler.uniform() * dim) % dim,
        static_cast<std::uint32_t>(sampler.uniform() * dim) % dim);
  }
  return points;
}

// ---------------------------------------------------------------------------

void check_binary_pauli(Suite& suite, const VerifyOptions& o,
                        StateSampler& sampler) {
  const int n = o.n_qubits;
  const auto triples = enumerate_triples(n);

  const std::int64_t expected =
      static_cast<std::int64_t>(n + 1) * (n + 2) * (n + 3) / 6;
  suite.add("census", std::abs(static_cast<double>(
                           static_cast<std::int64_t>(triples.size()) -
                           expected)));

  std::int64_t fiber_sum = 0;
  for (const auto& t : triples) {
    fiber_sum += r_mnk(n, t);
  }
  suite.add("fiber_sum",
            std::abs(static_cast<double>(fiber_sum - (1LL << (2 * n)))));

  if (n <= 5) {
    const std::uint32_t dim = 1u << n;
    double err = 0.0;
    for (const auto& t : triples) {
      std::int64_t count = 0;
      for (std::uint32_t a = 0; a < dim; ++a) {
        for (std::uint32_t b = 0; b < dim; ++b) {
          if (std::popcount(a) == t.m && std::popcount(b) == t.n &&
              std::popcount(a ^ b) == t.k) {
            ++count;
          }
        }
      }
      err = std::max(err, std::abs(static_cast<double>(count - r_mnk(n, t))));
    }
    suite.add("r_bruteforce", err);
  }

  {
    const std::uint32_t dim = 1u << n;
    auto points = sample_points(n, 64, sampler);
    double err = 0.0;
    for (const auto& [a, b] : points) {
      const PauliMonomial p(BinaryTuple(a % dim, n), BinaryTuple(b % dim, n));
      const Matrix m = monomial_matrix(p);
      err = std::max(err, max_abs(m * m.adjoint() -
                                  Matrix::Identity(dim, dim)));
    }
    suite.add("monomial_unitarity", err);
  }

  {
    auto points = sample_points(std::min(n, 4), 256, sampler);
    double err = 0.0;
    const int nn = std::min(n, 4);
    for (const auto& [a, b] : points) {
      const BinaryTuple ta(a, nn), tb(b, nn);
      const int lhs = (ta + tb).weight();
      const int rhs = ta.weight() + tb.weight() - 2 * dot_integer(ta, tb);
      err = std::max(err, std::abs(static_cast<double>(lhs - rhs)));
    }
    suite.add("dot_identity", err);
  }
}

void check_phase_space(Suite& suite, const VerifyOptions& o,
                       StateSampler& sampler) {
  const int n = o.n_qubits;
  const std::uint32_t dim = 1u << n;
  const FiducialState fid(n, o.xi);

  // Biorthogonality of the two kernel families.
  {
    const auto points = sample_points(n, n <= 3 ? dim * dim : 64, sampler);
    double err = 0.0;
    std::vector<Matrix> duals, projectors;
    duals.reserve(points.size());
    projectors.reserve(points.size());
    for (const auto& [a, b] : points) {
      duals.push_back(kernel(1, BinaryTuple(a, n), BinaryTuple(b, n), fid));
      projectors.push_back(
          kernel(-1, BinaryTuple(a, n), BinaryTuple(b, n), fid));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        const Complex pairing = (duals[i] * projectors[j]).trace();
        const double expected = (points[i] == points[j]) ? 1.0 : 0.0;
        err = std::max(err, std::abs(pairing - expected));
      }
    }
    suite.add("biorthogonality", err);
  }

  // Delta^(-1) is the coherent-state projector.
  {
    const auto points = sample_points(n, n <= 3 ? dim * dim : 32, sampler);
    double err = 0.0;
    for (const auto& [a, b] : points) {
      const BinaryTuple alpha(a, n), beta(b, n);
      const Matrix d = kernel(-1, alpha, beta, fid);
      const Vector v = coherent_state(alpha, beta, fid);
      err = std::max(err, max_abs(d - v * v.adjoint()));
      err = std::max(err, std::abs(d.trace() - Complex(1.0, 0.0)));
    }
    suite.add("kernel_projector", err);
  }

  if (n <= 4) {
    Matrix sum = Matrix::Zero(dim, dim);
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        const Vector v = coherent_state(BinaryTuple(a, n), BinaryTuple(b, n),
                                        fid);
        sum += v * v.adjoint();
      }
    }
    suite.add("completeness",
              max_abs(sum - std::pow(2.0, n) * Matrix::Identity(dim, dim)));
  }

  if (n <= 5) {
    double err = 0.0;
    const int repetitions = n <= 3 ? 5 : 2;
    for (int i = 0; i < repetitions; ++i) {
      const Matrix a = sampler.hermitian(dim);
      err = std::max(err, max_abs(reconstruct_full(a, fid) - a));
    }
    suite.add("roundtrip_full", err);
  }

  if (n == 1) {
    double err = 0.0;
    for (std::uint32_t a = 0; a < 2; ++a) {
      for (std::uint32_t b = 0; b < 2; ++b) {
        for (std::uint32_t a2 = 0; a2 < 2; ++a2) {
          for (std::uint32_t b2 = 0; b2 < 2; ++b2) {
            if (a == a2 && b == b2) {
              continue;
            }
            const Vector u = coherent_state(BinaryTuple(a, 1),
                                            BinaryTuple(b, 1), fid);
            const Vector v = coherent_state(BinaryTuple(a2, 1),
                                            BinaryTuple(b2, 1), fid);
            err = std::max(err, std::abs(std::norm(u.dot(v)) - 1.0 / 3.0));
          }
        }
      }
    }
    suite.add("sic_overlap", err);
  }
}

void check_special_fn(Suite& suite, const VerifyOptions& o,
                      StateSampler& sampler) {
  const int n = o.n_qubits;
  const auto triples = enumerate_triples(n);
  const bool exhaustive = n <= 4;

  {
    double err = 0.0;
    auto pick = [&](std::size_t bound) {
      return static_cast<std::size_t>(sampler.uniform() * bound) % bound;
    };
    if (exhaustive) {
      for (const auto& sub : triples) {
        for (const auto& arg : triples) {
          err = std::max(err, std::abs(static_cast<double>(
                                  g_bruteforce(n, sub, arg) -
                                  g_closedform(n, sub, arg))));
        }
      }
    } else {
      for (int i = 0; i < 300; ++i) {
        const auto& sub = triples[pick(triples.size())];
        const auto& arg = triples[pick(triples.size())];
        err = std::max(err, std::abs(static_cast<double>(
                                g_bruteforce(n, sub, arg) -
                                g_closedform(n, sub, arg))));
      }
    }
    suite.add("g_equivalence", err);
  }

  {
    double err = 0.0;
    for (const auto& arg : triples) {
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
          err = std::max(err, std::abs(static_cast<double>(
                                  f_bruteforce(n, m, k, arg) -
                                  f_closedform(n, m, k, arg))));
        }
      }
    }
    suite.add("f_equivalence", err);
  }

  {
    double err = 0.0;
    for (const auto& arg : triples) {
      for (int ell = 0; ell <= n; ++ell) {
        const Complex brute = psi_bruteforce(n, ell, arg, o.xi);
        const Complex closed = psi_closedform(n, ell, arg, o.xi);
        err = std::max(err, std::abs(brute - closed) /
                                std::max(1.0, std::abs(brute)));
      }
    }
    suite.add("psi_equivalence", err);
  }

  {
    // Both dual orthogonality relations in exact integers; the inverse
    // weights are cleared by a common denominator.
    const GTable& g = g_table(n);
    std::int64_t common = 1;
    for (const auto& t : triples) {
      common = std::lcm(common, r_mnk(n, t));
    }
    const std::int64_t four_n = 1LL << (2 * n);
    double err = 0.0;
    for (const auto& t1 : triples) {
      for (const auto& t2 : triples) {
        std::int64_t acc1 = 0;
        std::int64_t acc2 = 0;
        for (const auto& tp : triples) {
          const std::int64_t r = r_mnk(n, tp);
          acc1 += g.value(t1, tp) * g.value(t2, tp) * r;
          acc2 += g.value(tp, t1) * g.value(tp, t2) * (common / r);
        }
        const bool same = t1 == t2;
        const std::int64_t want1 = same ? four_n * r_mnk(n, t1) : 0;
        const std::int64_t want2 = same ? four_n * (common / r_mnk(n, t1)) : 0;
        err = std::max(err, std::abs(static_cast<double>(acc1 - want1)));
        err = std::max(err, std::abs(static_cast<double>(acc2 - want2)));
      }
    }
    suite.add("g_dual_orthogonality", err);
  }

  {
    // g and f are exact; psi is compared in relative terms, so the check
    // carries a small nonzero tolerance.
    double err = 0.0;
    for (const auto& arg : triples) {
      for (const auto& sub : triples) {
        err = std::max(err, std::abs(static_cast<double>(
                                g_bruteforce(n, sub, arg, 0) -
                                g_bruteforce(n, sub, arg, 1))));
      }
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
          err = std::max(err, std::abs(static_cast<double>(
                                  f_bruteforce(n, m, k, arg, 0) -
                                  f_bruteforce(n, m, k, arg, 1))));
        }
        const Complex a = psi_bruteforce(n, m, arg, o.xi, 0);
        const Complex b = psi_bruteforce(n, m, arg, o.xi, 1);
        err = std::max(err, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    }
    suite.add("representative_independence", err);
  }
}

void check_collective(Suite& suite, const VerifyOptions& o,
                      StateSampler& sampler) {
  const int n = o.n_qubits;
  const std::uint32_t dim = 1u << n;
  const FiducialState fid(n, o.xi);
  const auto triples = enumerate_triples(n);

  std::vector<Matrix> f_ops;
  f_ops.reserve(triples.size());
  for (const auto& t : triples) {
    f_ops.push_back(build_F(n, t));
  }

  {
    double err = 0.0;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (std::size_t j = 0; j < triples.size(); ++j) {
        const Complex tr = (f_ops[i] * f_ops[j]).trace();
        const double expected =
            (i == j) ? std::pow(2.0, n) *
                           static_cast<double>(r_mnk(n, triples[i]))
                     : 0.0;
        err = std::max(err, std::abs(tr - expected));
      }
    }
    suite.add("f_orthogonality", err);
  }

  {
    // Diagonal members of the family against their collective-spin forms.
    Matrix sz = Matrix::Zero(dim, dim);
    for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
      sz(kappa, kappa) = static_cast<double>(n - 2 * std::popcount(kappa));
    }
    const Matrix id = Matrix::Identity(dim, dim);
    double err = max_abs(build_F(n, {0, 0, 0}) - id);
    if (n >= 1) {
      err = std::max(err, max_abs(build_F(n, {1, 0, 1}) - sz));
    }
    if (n >= 2) {
      err = std::max(err, max_abs(build_F(n, {2, 0, 2}) -
                                  0.5 * (sz * sz - double(n) * id)));
    }
    if (n >= 3) {
      err = std::max(
          err, max_abs(build_F(n, {3, 0, 3}) -
                       (sz * sz * sz - double(3 * n - 2) * sz) / 6.0));
    }
    suite.add("f_identifications", err);
  }

  if (fid.has_default_xi()) {
    double err = 0.0;
    std::size_t limit = n <= 3 ? triples.size() : 3;
    for (std::size_t i = 0; i < limit; ++i) {
      const auto& t = triples[(i * 7) % triples.size()];
      for (int s : {1, -1}) {
        Matrix fiber = Matrix::Zero(dim, dim);
        for (std::uint32_t a = 0; a < dim; ++a) {
          for (std::uint32_t b = 0; b < dim; ++b) {
            if (std::popcount(a) == t.m && std::popcount(b) == t.n &&
                std::popcount(a ^ b) == t.k) {
              fiber += kernel(s, BinaryTuple(a, n), BinaryTuple(b, n), fid);
            }
          }
        }
        err = std::max(err, max_abs(fiber - kernel_symmetric(s, n, t, fid)));
      }
    }
    suite.add("kernel_symmetric_fiber", err);
  }

  {
    double err = 0.0;
    for (int i = 0; i < 5; ++i) {
      const Vector coeffs = sampler.pure_state(n + 1);
      Vector psi = Vector::Zero(dim);
      for (int ell = 0; ell <= n; ++ell) {
        psi += coeffs[ell] * dicke_basis_vector(n, ell);
      }
      const Matrix rho = psi * psi.adjoint();
      const Matrix rec = reconstruct_collective(collective_expectations(rho));
      err = std::max(err, max_abs(rec - rho));
    }
    suite.add("collective_roundtrip", err);
  }

  if (n <= 3) {
    // Pairing of the P symbol of a collective observable with the projected
    // Q function reproduces the expectation value.
    double err = 0.0;
    for (int i = 0; i < 5; ++i) {
      Matrix a_sym = Matrix::Zero(dim, dim);
      for (std::size_t j = 0; j < triples.size(); ++j) {
        a_sym += sampler.normal() * f_ops[j];
      }
      const Matrix rho = sampler.density_matrix(dim);
      const auto table = project_q(q_symbol(rho, fid));
      const auto p_sym = p_symbol(a_sym, fid);
      double paired = 0.0;
      for (const auto& t : triples) {
        const auto [alpha, beta] = representative_pair(n, t);
        paired += p_sym.values(alpha.index(), beta.index()).real() *
                  table.values.at(t);
      }
      err = std::max(err, std::abs(paired - (rho * a_sym).trace().real()));
    }
    suite.add("symbol_pairing", err);
  }

  {
    double trans_err = 0.0;
    double idem_err = 0.0;
    double block_err = 0.0;
    double psd_err = 0.0;
    const auto projectors = total_spin_projectors(n);
    for (int i = 0; i < 3; ++i) {
      const Matrix rho = sampler.density_matrix(dim);
      const Matrix rec = reconstruct_collective(collective_expectations(rho));
      for (int qi = 0; qi < n; ++qi) {
        for (int qj = qi + 1; qj < n; ++qj) {
          const Matrix swap = transposition_matrix(n, qi, qj);
          trans_err = std::max(trans_err, max_abs(swap * rec * swap - rec));
        }
      }
      const Matrix rec2 = reconstruct_collective(collective_expectations(
          rec, DensityCheck{1e-8, 1e-6, -1e-6, true}));
      idem_err = std::max(idem_err, max_abs(rec2 - rec));
      for (const Matrix& p : projectors) {
        block_err = std::max(block_err, max_abs(p * rec - rec * p));
      }
      Eigen::SelfAdjointEigenSolver<Matrix> solver(rec,
                                                   Eigen::EigenvaluesOnly);
      psd_err = std::max(psd_err, -solver.eigenvalues().minCoeff());
    }
    suite.add("transposition_invariance", trans_err);
    suite.add("reconstruction_idempotent", idem_err);
    suite.add("block_diagonal", block_err);
    suite.add("psd_floor", std::max(0.0, psd_err));
  }

  if (n == 2) {
    double err = 0.0;
    for (int i = 0; i < 50; ++i) {
      ParamState2Q p;
      p.theta = (i + 0.5) * (M_PI / 2.0) / 50.0;
      p.beta = sampler.uniform() * 2.0 * M_PI;
      p.alpha1 = sampler.uniform() * M_PI / 2.0;
      p.alpha2 = sampler.uniform() * M_PI / 2.0;
      p.gamma1 = sampler.uniform() * 2.0 * M_PI;
      p.gamma2 = sampler.uniform() * 2.0 * M_PI;
      const Vector psi = state_2q(p);
      const Matrix rec = reconstruct_collective(
          collective_expectations(psi * psi.adjoint()));
      err = std::max(err,
                     std::abs(fidelity(rec, psi) - fidelity_2q_formula(p.theta)));
    }
    suite.add("fidelity_2q", err);
  }

  if (n == 3) {
    const auto& bases = three_qubit_half_spin_bases();
    const Vector* c1[2] = {&bases.copy1_up, &bases.copy1_down};
    const Vector* c2[2] = {&bases.copy2_up, &bases.copy2_down};
    double block_err = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      ParamState3Q p;
      p.theta = sampler.uniform() * M_PI / 2.0;
      p.alpha = sampler.uniform() * M_PI / 2.0;
      p.beta = sampler.uniform() * 2.0 * M_PI;
      p.gamma = sampler.uniform() * 2.0 * M_PI;
      p.theta1 = sampler.uniform() * M_PI / 2.0;
      p.beta1 = sampler.uniform() * 2.0 * M_PI;
      p.alpha1 = sampler.uniform() * M_PI / 2.0;
      p.alpha2 = sampler.uniform() * M_PI / 2.0;
      p.gamma1 = sampler.uniform() * 2.0 * M_PI;
      p.gamma2 = sampler.uniform() * 2.0 * M_PI;
      p.theta2 = sampler.uniform() * M_PI / 2.0;
      p.beta2 = sampler.uniform() * 2.0 * M_PI;
      p.theta3 = sampler.uniform() * M_PI / 2.0;
      p.beta3 = sampler.uniform() * 2.0 * M_PI;
      const Vector psi = state_3q(p);
      const Matrix rec = reconstruct_collective(
          collective_expectations(psi * psi.adjoint()));
      const Eigen::Matrix2cd expected = 0.5 * std::cos(p.theta) *
                                        std::cos(p.theta) *
                                        rho2_block_formula(p);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          const Complex b1 = (c1[r]->adjoint() * rec * (*c1[c])).value();
          const Complex b2 = (c2[r]->adjoint() * rec * (*c2[c])).value();
          block_err = std::max(block_err, std::abs(b1 - expected(r, c)));
          block_err = std::max(block_err, std::abs(b2 - expected(r, c)));
        }
      }
    }
    suite.add("fidelity_3q_blocks", block_err);

    double avg_err = 0.0;
    for (const auto& [theta, alpha] :
         {std::pair{0.0, M_PI / 4.0}, {M_PI / 2.0, 0.9}, {0.6, 1.2}}) {
      avg_err = std::max(avg_err,
                         std::abs(avg_fidelity_3q(theta, alpha) -
                                  avg_fidelity_3q_formula(theta, alpha)));
    }
    suite.add("fidelity_3q_average", avg_err);
  }
}

void check_dicke(Suite& suite, const VerifyOptions& o, StateSampler& sampler) {
  const int n = o.n_qubits;
  const std::uint32_t dim = 1u << n;
  const FiducialState fid(n, o.xi);
  const auto triples = enumerate_triples(n);
  const Matrix proj = symmetric_projector(n);
  const PovmElementTable povm = build_povm(n, o.xi);

  {
    const auto points = sample_points(n, n <= 3 ? dim * dim : 24, sampler);
    double err = 0.0;
    for (const auto& [a, b] : points) {
      const BinaryTuple alpha(a, n), beta(b, n);
      const Matrix projected =
          proj * kernel(-1, alpha, beta, fid) * proj;
      const Vector psi = embed_dicke(
          build_psi(n, weights_of(alpha, beta), o.xi), n);
      err = std::max(err, max_abs(projected - psi * psi.adjoint()));
    }
    suite.add("d1s_rank_one", err);
  }

  {
    Matrix sum = Matrix::Zero(n + 1, n + 1);
    for (const auto& [t, elem] : povm.elements) {
      sum += static_cast<double>(elem.weight) * elem.psi *
             elem.psi.adjoint();
    }
    double err = max_abs(sum - std::pow(2.0, n) *
                                   Matrix::Identity(n + 1, n + 1));
    if (n <= 4) {
      Matrix embedded = Matrix::Zero(dim, dim);
      for (const auto& [t, elem] : povm.elements) {
        const Vector psi = embed_dicke(elem.psi, n);
        embedded += static_cast<double>(elem.weight) * psi * psi.adjoint();
      }
      err = std::max(err, max_abs(embedded - std::pow(2.0, n) * proj));
    }
    suite.add("povm_completeness", err);
  }

  {
    std::set<std::int64_t> distinct;
    for (const auto& [t, elem] : povm.elements) {
      distinct.insert(std::llround(elem.norm_sq * 1e9));
    }
    // The squared norm depends only on the multiset of the four
    // displacement-class multiplicities, so the distinct count is the
    // number of partitions of N into at most four parts (= N for N <= 3).
    int partitions = 0;
    for (int a = 0; a <= n; ++a) {
      for (int b = a; a + b <= n; ++b) {
        for (int c = b; a + b + c <= n; ++c) {
          const int d = n - a - b - c;
          if (d >= c) {
            ++partitions;
          }
        }
      }
    }
    suite.add("distinct_norms",
              std::max(0.0, static_cast<double>(distinct.size()) -
                                static_cast<double>(partitions)));
  }

  if (fid.has_default_xi()) {
    double err = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Matrix rho = sampler.density_matrix(n + 1);
      const auto probs = measure_probabilities(rho, povm);
      err = std::max(err,
                     max_abs(reconstruct_symmetric(probs, n, o.xi) - rho));
    }
    suite.add("dicke_roundtrip", err);

    const Eigen::MatrixXd omega = build_omega(n, o.xi);
    double resid = 0.0;
    for (int i = 0; i < 5; ++i) {
      const Matrix rho = sampler.density_matrix(n + 1);
      const auto probs = measure_probabilities(rho, povm);
      Eigen::VectorXd p(triples.size());
      for (std::size_t j = 0; j < triples.size(); ++j) {
        p[j] = probs.at(triples[j]);
      }
      resid = std::max(resid, (omega * p - p).cwiseAbs().maxCoeff());
    }
    suite.add("omega_constraint", resid);

    const OmegaRankReport report = omega_rank_report(n, o.xi);
    const int expected = n * (n * n - 1) / 6;
    suite.add("omega_rank",
              std::abs(static_cast<double>(report.rank - expected)));
  }

  if (fid.has_default_xi() && n <= 4) {
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Matrix rho_small = sampler.density_matrix(n + 1);
      Matrix rho_big = Matrix::Zero(dim, dim);
      std::vector<Vector> dicke;
      for (int ell = 0; ell <= n; ++ell) {
        dicke.push_back(dicke_basis_vector(n, ell));
      }
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
          rho_big += rho_small(a, b) * dicke[a] * dicke[b].adjoint();
        }
      }
      const Matrix rec_big =
          reconstruct_collective(collective_expectations(rho_big));
      const auto probs = measure_probabilities(rho_small, povm);
      const Matrix rec_small = reconstruct_symmetric(probs, n, o.xi);
      Matrix rec_small_embedded = Matrix::Zero(dim, dim);
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
          rec_small_embedded += rec_small(a, b) * dicke[a] * dicke[b].adjoint();
        }
      }
      err = std::max(err, max_abs(rec_big - rec_small_embedded));
    }
    suite.add("module_consistency", err);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  if (options.n_qubits < 1) {
    throw DomainError("run_verify: N must be >= 1");
  }
  for (const auto& [name, tol] : options.tolerance_overrides) {
    if (name != "all" && !default_tolerances().count(name)) {
      throw DomainError("run_verify: unknown tolerance name '" + name + "'");
    }
  }
  Suite suite(options);
  StateSampler sampler(options.seed);
  const std::string& p = options.profile;
  const bool all = p == "all";
  if (!all && p != "binary-pauli" && p != "phase-space" && p != "special-fn" &&
      p != "collective" && p != "dicke") {
    throw DomainError("run_verify: unknown profile '" + p + "'");
  }
  if (all || p == "binary-pauli") {
    check_binary_pauli(suite, options, sampler);
  }
  if (all || p == "phase-space") {
    check_phase_space(suite, options, sampler);
  }
  if (all || p == "special-fn") {
    check_special_fn(suite, options, sampler);
  }
  if (all || p == "collective") {
    check_collective(suite, options, sampler);
  }
  if (all || p == "dicke") {
    check_dicke(suite, options, sampler);
  }
  return suite.take();
}

std::vector<std::string> known_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, tol] : default_tolerances()) {
    names.push_back(name);
  }
  return names;
}

}  // namespace colltomo
