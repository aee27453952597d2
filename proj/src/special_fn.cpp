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

#include "colltomo/special_fn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace colltomo {

namespace {

void require_admissible(int n_qubits, const HammingTriple& t,
                        const char* where) {
  if (!admissible(n_qubits, t)) {
    throw DomainError(std::string(where) + ": triple (" + std::to_string(t.m) +
                      "," + std::to_string(t.n) + "," + std::to_string(t.k) +
                      ") is not admissible for N=" + std::to_string(n_qubits));
  }
}

// [x^t] (1-x)^p (1+x)^q, evaluated in exact integers. This is the
// terminating-hypergeometric factor of the closed forms.
std::int64_t signed_binomial_convolution(int p, int q, int t) {
  if (t < 0 || t > p + q) {
    return 0;
  }
  std::int64_t sum = 0;
  for (int i = std::max(0, t - q); i <= std::min(p, t); ++i) {
    const std::int64_t term = binomial(p, i) * binomial(q, t - i);
    sum += (i & 1) ? -term : term;
  }
  return sum;
}

// Dense trivariate polynomial with integer coefficients, degree <= 2N in
// each variable; only even total degrees ever appear but we keep it simple.
struct TriPoly {
  int stride;  // degree bound + 1 per variable
  std::vector<std::int64_t> c;

  explicit TriPoly(int max_degree)
      : stride(max_degree + 1),
        c(static_cast<std::size_t>(stride) * stride * stride, 0) {}

  std::int64_t& at(int d1, int d2, int d3) {
    return c[(static_cast<std::size_t>(d1) * stride + d2) * stride + d3];
  }
  std::int64_t get(int d1, int d2, int d3) const {
    if (d1 >= stride || d2 >= stride || d3 >= stride) {
      return 0;
    }
    return c[(static_cast<std::size_t>(d1) * stride + d2) * stride + d3];
  }

  // Multiply in place by (1 + s12*w1*w2 + s13*w1*w3 + s23*w2*w3).
  void mul_factor(int s12, int s13, int s23) {
    TriPoly out(stride - 1);
    for (int d1 = 0; d1 < stride; ++d1) {
      for (int d2 = 0; d2 < stride; ++d2) {
        for (int d3 = 0; d3 < stride; ++d3) {
          const std::int64_t v = get(d1, d2, d3);
          if (v == 0) {
            continue;
          }
          out.at(d1, d2, d3) += v;
          if (d1 + 1 < stride && d2 + 1 < stride) {
            out.at(d1 + 1, d2 + 1, d3) += s12 * v;
          }
          if (d1 + 1 < stride && d3 + 1 < stride) {
            out.at(d1 + 1, d2, d3 + 1) += s13 * v;
          }
          if (d2 + 1 < stride && d3 + 1 < stride) {
            out.at(d1, d2 + 1, d3 + 1) += s23 * v;
          }
        }
      }
    }
    c.swap(out.c);
  }
};

}  // namespace

std::int64_t g_bruteforce(int n_qubits, const HammingTriple& sub,
                          const HammingTriple& arg, int variant) {
  require_admissible(n_qubits, sub, "g_bruteforce");
  require_admissible(n_qubits, arg, "g_bruteforce");
  const auto [alpha, beta] = representative_pair(n_qubits, arg, variant);
  const std::uint32_t dim = 1u << n_qubits;
  std::int64_t sum = 0;
  for (std::uint32_t gamma = 0; gamma < dim; ++gamma) {
    if (std::popcount(gamma) != sub.m) {
      continue;
    }
    for (std::uint32_t delta = 0; delta < dim; ++delta) {
      if (std::popcount(delta) != sub.n ||
          std::popcount(gamma ^ delta) != sub.k) {
        continue;
      }
      const int sign_bit = (std::popcount(alpha.index() & delta) +
                            std::popcount(beta.index() & gamma)) &
                           1;
      sum += sign_bit ? -1 : 1;
    }
  }
  return sum;
}

std::int64_t g_closedform(int n_qubits, const HammingTriple& sub,
                          const HammingTriple& arg) {
  require_admissible(n_qubits, sub, "g_closedform");
  require_admissible(n_qubits, arg, "g_closedform");
  const PairClassCounts c = class_counts(n_qubits, arg);
  TriPoly poly(2 * n_qubits);
  poly.at(0, 0, 0) = 1;
  // Per-position generating factors, one class of positions at a time.
  // w1 counts h(gamma), w2 counts h(delta), w3 counts h(gamma+delta).
  for (int i = 0; i < c.n00; ++i) {
    poly.mul_factor(+1, +1, +1);
  }
  for (int i = 0; i < c.n01; ++i) {
    poly.mul_factor(-1, -1, +1);
  }
  for (int i = 0; i < c.n10; ++i) {
    poly.mul_factor(-1, +1, -1);
  }
  for (int i = 0; i < c.n11; ++i) {
    poly.mul_factor(+1, -1, -1);
  }
  return poly.get(sub.m, sub.n, sub.k);
}

std::int64_t f_bruteforce(int n_qubits, int m, int k,
                          const HammingTriple& weights, int variant) {
  require_admissible(n_qubits, weights, "f_bruteforce");
  // weights = (h(delta), h(gamma), h(gamma+delta)).
  const auto [delta, gamma] = representative_pair(n_qubits, weights, variant);
  const std::uint32_t e = gamma.index() ^ delta.index();
  const std::uint32_t dim = 1u << n_qubits;
  std::int64_t sum = 0;
  for (std::uint32_t mu = 0; mu < dim; ++mu) {
    if (std::popcount(mu) != m || std::popcount(mu ^ e) != k) {
      continue;
    }
    sum += (std::popcount(mu & delta.index()) & 1) ? -1 : 1;
  }
  return sum;
}

std::int64_t f_closedform(int n_qubits, int m, int k,
                          const HammingTriple& weights) {
  require_admissible(n_qubits, weights, "f_closedform");
  if (m < 0 || m > n_qubits || k < 0 || k > n_qubits) {
    return 0;
  }
  const PairClassCounts c = class_counts(n_qubits, weights);
  const int w_xor = weights.k;
  if ((m + k + w_xor) % 2 != 0) {
    return 0;  // parity gate: both split indices must be integral
  }
  const int j_split = (m - k + w_xor) / 2;
  const int p_split = m - j_split;
  return signed_binomial_convolution(c.n10, c.n01, j_split) *
         signed_binomial_convolution(c.n11, c.n00, p_split);
}

namespace {

Complex xi_power(Complex xi, int e) {
  Complex result(1.0, 0.0);
  for (int i = 0; i < e; ++i) {
    result *= xi;
  }
  return result;
}

}  // namespace

Complex psi_bruteforce(int n_qubits, int ell, const HammingTriple& triple,
                       Complex xi, int variant) {
  require_admissible(n_qubits, triple, "psi_bruteforce");
  if (ell < 0 || ell > n_qubits) {
    throw DomainError("psi_bruteforce: ell out of range");
  }
  const auto [alpha, beta] = representative_pair(n_qubits, triple, variant);
  const std::uint32_t dim = 1u << n_qubits;
  Complex sum(0.0, 0.0);
  for (std::uint32_t kappa = 0; kappa < dim; ++kappa) {
    if (std::popcount(kappa) != ell) {
      continue;
    }
    const double sign =
        (std::popcount(alpha.index() & kappa) & 1) ? -1.0 : 1.0;
    sum += sign * xi_power(xi, std::popcount(kappa ^ beta.index()));
  }
  return sum;
}

Complex psi_closedform(int n_qubits, int ell, const HammingTriple& triple,
                       Complex xi) {
  require_admissible(n_qubits, triple, "psi_closedform");
  if (ell < 0 || ell > n_qubits) {
    throw DomainError("psi_closedform: ell out of range");
  }
  const PairClassCounts c = class_counts(n_qubits, triple);
  const int b = triple.n;
  Complex sum(0.0, 0.0);
  for (int j2 = 0; j2 <= std::min(c.n01, ell); ++j2) {
    for (int j3 = 0; j3 <= std::min(c.n10, ell - j2); ++j3) {
      for (int j4 = 0; j4 <= std::min(c.n11, ell - j2 - j3); ++j4) {
        const std::int64_t coeff = binomial(c.n00, ell - j2 - j3 - j4) *
                                   binomial(c.n01, j2) * binomial(c.n10, j3) *
                                   binomial(c.n11, j4);
        if (coeff == 0) {
          continue;
        }
        // Exponent ell + b - 2(j2 + j4) is >= 0 whenever coeff != 0.
        const double sign = ((j3 + j4) & 1) ? -1.0 : 1.0;
        sum += sign * static_cast<double>(coeff) *
               xi_power(xi, ell + b - 2 * (j2 + j4));
      }
    }
  }
  return sum;
}

GTable::GTable(int n_qubits)
    : n_(n_qubits), triples_(enumerate_triples(n_qubits)) {
  const std::size_t t = triples_.size();
  values_.resize(t * t);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t s = 0; s < t; ++s) {
      values_[s * t + a] = g_bruteforce(n_, triples_[s], triples_[a]);
    }
  }
}

int GTable::index_of(const HammingTriple& t) const {
  const auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || !(*it == t)) {
    throw DomainError("GTable: triple not admissible");
  }
  return static_cast<int>(it - triples_.begin());
}

std::int64_t GTable::value(const HammingTriple& sub,
                           const HammingTriple& arg) const {
  return values_[static_cast<std::size_t>(index_of(sub)) * triples_.size() +
                 index_of(arg)];
}

FTable::FTable(int n_qubits)
    : n_(n_qubits), triples_(enumerate_triples(n_qubits)) {
  const int d = n_ + 1;
  values_.resize(triples_.size() * d * d);
  for (std::size_t a = 0; a < triples_.size(); ++a) {
    for (int m = 0; m <= n_; ++m) {
      for (int k = 0; k <= n_; ++k) {
        values_[(a * d + m) * d + k] = f_bruteforce(n_, m, k, triples_[a]);
      }
    }
  }
}

std::int64_t FTable::value(int m, int k, const HammingTriple& weights) const {
  if (m < 0 || m > n_ || k < 0 || k > n_) {
    throw DomainError("FTable: index out of range");
  }
  const auto it =
      std::lower_bound(triples_.begin(), triples_.end(), weights);
  if (it == triples_.end() || !(*it == weights)) {
    throw DomainError("FTable: triple not admissible");
  }
  const std::size_t a = static_cast<std::size_t>(it - triples_.begin());
  const int d = n_ + 1;
  return values_[(a * d + m) * d + k];
}

PsiTable::PsiTable(int n_qubits, Complex xi)
    : n_(n_qubits), xi_(xi), triples_(enumerate_triples(n_qubits)) {
  const int d = n_ + 1;
  values_.resize(triples_.size() * d);
  for (std::size_t a = 0; a < triples_.size(); ++a) {
    for (int ell = 0; ell <= n_; ++ell) {
      values_[a * d + ell] = psi_bruteforce(n_, ell, triples_[a], xi_);
    }
  }
}

Complex PsiTable::value(int ell, const HammingTriple& triple) const {
  if (ell < 0 || ell > n_) {
    throw DomainError("PsiTable: ell out of range");
  }
  const auto it = std::lower_bound(triples_.begin(), triples_.end(), triple);
  if (it == triples_.end() || !(*it == triple)) {
    throw DomainError("PsiTable: triple not admissible");
  }
  const std::size_t a = static_cast<std::size_t>(it - triples_.begin());
  return values_[a * static_cast<std::size_t>(n_ + 1) + ell];
}

const GTable& g_table(int n_qubits) {
  static std::mutex mutex;
  static std::map<int, GTable> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n_qubits);
  if (it == cache.end()) {
    it = cache.emplace(n_qubits, GTable(n_qubits)).first;
  }
  return it->second;
}

const FTable& f_table(int n_qubits) {
  static std::mutex mutex;
  static std::map<int, FTable> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n_qubits);
  if (it == cache.end()) {
    it = cache.emplace(n_qubits, FTable(n_qubits)).first;
  }
  return it->second;
}

const PsiTable& psi_table(int n_qubits, Complex xi) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, PsiTable> cache;
  std::scoped_lock lock(mutex);
  const auto key = std::make_tuple(n_qubits, xi.real(), xi.imag());
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, PsiTable(n_qubits, xi)).first;
  }
  return it->second;
}

}  // namespace colltomo
