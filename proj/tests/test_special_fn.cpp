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

#include <doctest.h>

#include <random>

#include "colltomo/phase_space.hpp"
#include "colltomo/special_fn.hpp"

using namespace colltomo;

TEST_CASE("g brute force, hand-computed values") {
  // At the zero subscript only gamma = delta = 0 contributes.
  for (const auto& arg : enumerate_triples(1)) {
    CHECK(g_bruteforce(1, {0, 0, 0}, arg) == 1);
  }
  CHECK(g_bruteforce(1, {1, 0, 1}, {0, 1, 1}) == -1);
  CHECK(g_bruteforce(1, {1, 0, 1}, {1, 0, 1}) == 1);
  CHECK_THROWS_AS(g_bruteforce(2, {1, 1, 1}, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(g_bruteforce(2, {0, 0, 0}, {1, 1, 1}), DomainError);
}

TEST_CASE("g at zero argument counts the fiber") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sub : enumerate_triples(n)) {
      CHECK(g_bruteforce(n, sub, {0, 0, 0}) == r_mnk(n, sub));
    }
  }
}

TEST_CASE("g closed form equals brute force exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    const auto triples = enumerate_triples(n);
    for (const auto& sub : triples) {
      for (const auto& arg : triples) {
        CHECK(g_closedform(n, sub, arg) == g_bruteforce(n, sub, arg));
      }
    }
  }
}

TEST_CASE("g dual orthogonality") {
  for (int n = 1; n <= 4; ++n) {
    const GTable& g = g_table(n);
    const auto& triples = g.triples();
    const std::int64_t four_n = 1LL << (2 * n);
    for (const auto& t1 : triples) {
      for (const auto& t2 : triples) {
        // sum_t' g_t1(t') g_t2(t') R_t' = 4^N R_t1 delta, in exact integers
        std::int64_t acc = 0;
        for (const auto& tp : triples) {
          acc += g.value(t1, tp) * g.value(t2, tp) * r_mnk(n, tp);
        }
        CHECK(acc == (t1 == t2 ? four_n * r_mnk(n, t1) : 0));
        // sum_t' g_t'(t1) g_t'(t2) / R_t' = 4^N / R_t1 delta; scale by the
        // common denominator prod R to stay exact
        double acc2 = 0.0;
        for (const auto& tp : triples) {
          acc2 += static_cast<double>(g.value(tp, t1)) *
                  static_cast<double>(g.value(tp, t2)) /
                  static_cast<double>(r_mnk(n, tp));
        }
        const double expected =
            t1 == t2 ? static_cast<double>(four_n) /
                           static_cast<double>(r_mnk(n, t1))
                     : 0.0;
        CHECK(std::abs(acc2 - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("f brute force, hand-computed values") {
  CHECK(f_bruteforce(1, 0, 0, {0, 0, 0}) == 1);
  CHECK(f_bruteforce(2, 1, 1, {0, 0, 0}) == 2);
  CHECK(f_bruteforce(2, 1, 1, {2, 0, 2}) == -2);
  CHECK_THROWS_AS(f_bruteforce(2, 0, 0, {2, 1, 0}), DomainError);
}

TEST_CASE("f closed form equals brute force exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& arg : enumerate_triples(n)) {
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
          CHECK(f_closedform(n, m, k, arg) == f_bruteforce(n, m, k, arg));
        }
      }
    }
  }
}

TEST_CASE("f vanishes on parity-violating indices") {
  // m + k must have the parity of the xor weight
  CHECK(f_closedform(3, 1, 0, {1, 1, 2}) == 0);
  CHECK(f_bruteforce(3, 1, 0, {1, 1, 2}) == 0);
}

TEST_CASE("f random spot checks at N=3") {
  std::mt19937 rng(7);
  const auto triples = enumerate_triples(3);
  for (int i = 0; i < 100; ++i) {
    const auto& arg = triples[rng() % triples.size()];
    const int m = static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 4);
    CHECK(f_closedform(3, m, k, arg) == f_bruteforce(3, m, k, arg));
  }
}

TEST_CASE("f is a reduction of the g-type sum") {
  // Replacing the weight constraint on the second summed tuple by a fixed
  // tuple (the xor of the representative pair) turns the g sum into f.
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t dim = 1u << n;
    for (const auto& weights : enumerate_triples(n)) {
      const auto [delta, gamma] = representative_pair(n, weights);
      const std::uint32_t e = gamma.index() ^ delta.index();
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
          std::int64_t acc = 0;
          for (std::uint32_t mu = 0; mu < dim; ++mu) {
            const std::uint32_t lambda = mu ^ e;
            if (std::popcount(mu) != m || std::popcount(lambda) != k) {
              continue;
            }
            acc += (std::popcount(mu & delta.index()) & 1) ? -1 : 1;
          }
          CHECK(acc == f_bruteforce(n, m, k, weights));
        }
      }
    }
  }
}

TEST_CASE("psi brute force, hand-computed values") {
  const Complex xi = default_xi();
  // all-plus signs at the zero triple
  for (int n = 1; n <= 4; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      Complex expected(static_cast<double>(binomial(n, ell)), 0.0);
      for (int i = 0; i < ell; ++i) {
        expected *= xi;
      }
      CHECK(std::abs(psi_bruteforce(n, ell, {0, 0, 0}, xi) - expected) <
            1e-14);
    }
  }
  CHECK(std::abs(psi_bruteforce(1, 0, {0, 1, 1}, xi) - xi) < 1e-15);
  CHECK(std::abs(psi_bruteforce(1, 1, {1, 0, 1}, xi) + xi) < 1e-15);
  CHECK_THROWS_AS(psi_bruteforce(2, 3, {0, 0, 0}, xi), DomainError);
}

TEST_CASE("psi closed form equals brute force") {
  // Two algebraically unrelated xi values plus the degenerate real case.
  const Complex xis[] = {default_xi(), Complex(0.7, 0.3), Complex(1.0, 0.0)};
  for (const Complex& xi : xis) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& arg : enumerate_triples(n)) {
        for (int ell = 0; ell <= n; ++ell) {
          const Complex brute = psi_bruteforce(n, ell, arg, xi);
          const Complex closed = psi_closedform(n, ell, arg, xi);
          CHECK(std::abs(brute - closed) <=
                1e-12 * std::max(1.0, std::abs(brute)));
        }
      }
    }
  }
}

TEST_CASE("representative independence") {
  for (int n = 1; n <= 4; ++n) {
    const auto triples = enumerate_triples(n);
    const Complex xi = default_xi();
    for (const auto& arg : triples) {
      for (const auto& sub : triples) {
        CHECK(g_bruteforce(n, sub, arg, 0) == g_bruteforce(n, sub, arg, 1));
      }
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
          CHECK(f_bruteforce(n, m, k, arg, 0) == f_bruteforce(n, m, k, arg, 1));
        }
        CHECK(std::abs(psi_bruteforce(n, m, arg, xi, 0) -
                       psi_bruteforce(n, m, arg, xi, 1)) < 1e-13);
      }
    }
  }
}

TEST_CASE("tables agree with the scalar evaluators") {
  const int n = 3;
  const Complex xi = default_xi();
  const GTable& g = g_table(n);
  const FTable& f = f_table(n);
  const PsiTable& psi = psi_table(n, xi);
  for (const auto& arg : enumerate_triples(n)) {
    for (const auto& sub : enumerate_triples(n)) {
      CHECK(g.value(sub, arg) == g_bruteforce(n, sub, arg));
    }
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        CHECK(f.value(m, k, arg) == f_bruteforce(n, m, k, arg));
      }
      CHECK(psi.value(m, arg) == psi_bruteforce(n, m, arg, xi));
    }
  }
}
