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

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "colltomo/binary_pauli.hpp"

namespace colltomo {

// Three families of discrete functions underpin the collective-measurement
// expansions. Each comes in two implementations: an exhaustive sum over
// binary tuples (the authoritative semantics) and a closed-form finite sum
// derived from the generating function of the per-position classes. The two
// are cross-checked exhaustively in the tests; production tables are built
// from the exhaustive sums.

/**
 * g with subscript triple `sub` and argument triple `arg`:
 * the signed count over pairs (gamma, delta) of weights `sub`, the sign being
 * (-1)^{alpha.delta + beta.gamma} for a representative (alpha, beta) of
 * `arg`. Independent of the representative. Always an integer;
 * g(sub, (0,0,0)) = r_mnk(N, sub).
 */
std::int64_t g_bruteforce(int n_qubits, const HammingTriple& sub,
                          const HammingTriple& arg, int variant = 0);

/// Coefficient-extraction evaluation of the same function: the coefficient of
/// w1^m w2^n w3^k in the product of the four per-position class factors.
std::int64_t g_closedform(int n_qubits, const HammingTriple& sub,
                          const HammingTriple& arg);

/**
 * f with indices (m, k) and weight arguments (h(delta), h(gamma),
 * h(gamma+delta)): the signed count over mu with h(mu) = m and
 * h(mu+gamma+delta) = k, sign (-1)^{mu.delta}.
 */
std::int64_t f_bruteforce(int n_qubits, int m, int k,
                          const HammingTriple& weights, int variant = 0);

/**
 * Closed form of f as a product of two signed binomial convolutions,
 * [x^J](1-x)^{n10}(1+x)^{n01} * [x^P](1-x)^{n11}(1+x)^{n00},
 * where J = (m - k + w_xor)/2 and P = m - J. The middle index enters only
 * through this split; both J and P must be integers or f vanishes.
 */
std::int64_t f_closedform(int n_qubits, int m, int k,
                          const HammingTriple& weights);

/**
 * psi_ell(triple; xi): sum over kappa of weight ell of
 * xi^{h(kappa+beta)} (-1)^{alpha.kappa}, for a representative (alpha, beta)
 * of `triple`. A polynomial in xi with integer coefficients;
 * psi_ell((0,0,0); xi) = binom(N, ell) xi^ell.
 */
Complex psi_bruteforce(int n_qubits, int ell, const HammingTriple& triple,
                       Complex xi, int variant = 0);

/// Finite-sum evaluation of psi_ell.
Complex psi_closedform(int n_qubits, int ell, const HammingTriple& triple,
                       Complex xi);

/// All g values for one N: value(sub, arg) over admissible triples.
class GTable {
 public:
  explicit GTable(int n_qubits);

  int n_qubits() const { return n_; }
  const std::vector<HammingTriple>& triples() const { return triples_; }

  std::int64_t value(const HammingTriple& sub, const HammingTriple& arg) const;

 private:
  int index_of(const HammingTriple& t) const;

  int n_;
  std::vector<HammingTriple> triples_;
  std::vector<std::int64_t> values_;  // row-major [sub][arg]
};

/// All f values for one N, keyed by ((m, k), weight triple).
class FTable {
 public:
  explicit FTable(int n_qubits);

  int n_qubits() const { return n_; }

  std::int64_t value(int m, int k, const HammingTriple& weights) const;

 private:
  int n_;
  std::vector<HammingTriple> triples_;
  std::vector<std::int64_t> values_;
};

/// All psi values for one (N, xi), keyed by (ell, triple).
class PsiTable {
 public:
  PsiTable(int n_qubits, Complex xi);

  int n_qubits() const { return n_; }
  Complex xi() const { return xi_; }

  Complex value(int ell, const HammingTriple& triple) const;

 private:
  int n_;
  Complex xi_;
  std::vector<HammingTriple> triples_;
  std::vector<Complex> values_;
};

// Cached table accessors. Tables are immutable once built; the caches are
// mutex-guarded so lookups are safe from any thread.
const GTable& g_table(int n_qubits);
const FTable& f_table(int n_qubits);
const PsiTable& psi_table(int n_qubits, Complex xi);

}  // namespace colltomo
