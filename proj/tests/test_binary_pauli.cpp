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

#include <algorithm>
#include <map>
#include <set>

#include "colltomo/binary_pauli.hpp"

using namespace colltomo;

TEST_CASE("hamming weight") {
  CHECK(BinaryTuple::from_components({0, 0, 0}).weight() == 0);
  CHECK(BinaryTuple::from_components({1, 0, 1}).weight() == 2);

  // complement identity, exhaustive at N=4
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    const BinaryTuple t(bits, 4);
    CHECK(t.weight() + t.complement().weight() == 4);
  }
}

TEST_CASE("bit order round trip") {
  // Component 1 is the most significant bit of the basis index.
  const BinaryTuple t = BinaryTuple::from_components({1, 0, 0});
  CHECK(t.index() == 4);
  CHECK(t.component(0) == 1);
  CHECK(t.component(1) == 0);
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    const BinaryTuple u(bits, 3);
    CHECK(BinaryTuple::from_components(u.components()) == u);
  }
}

TEST_CASE("dot products") {
  const auto a2 = BinaryTuple::from_components({1, 1});
  const auto b2 = BinaryTuple::from_components({1, 0});
  CHECK(dot_mod2(a2, b2) == 1);
  CHECK(dot_mod2(a2, a2) == 0);
  CHECK(dot_integer(a2, a2) == 2);
  CHECK(dot_integer(BinaryTuple::from_components({1, 0, 1}),
                    BinaryTuple::from_components({0, 1, 1})) == 1);

  CHECK_THROWS_AS(dot_mod2(a2, BinaryTuple(0, 3)), DimensionError);

  // a.b = (h(a) + h(b) - h(a+b)) / 2, exhaustively at N=3
  for (std::uint32_t i = 0; i < 8; ++i) {
    for (std::uint32_t j = 0; j < 8; ++j) {
      const BinaryTuple a(i, 3), b(j, 3);
      const int half = (a.weight() + b.weight() - (a + b).weight()) / 2;
      CHECK(dot_integer(a, b) == half);
      CHECK(dot_mod2(a, b) == (half & 1));
    }
  }
}

TEST_CASE("tuple addition is mod 2 and self-inverse") {
  for (std::uint32_t i = 0; i < 16; ++i) {
    const BinaryTuple t(i, 4);
    CHECK((t + t).weight() == 0);
  }
}

TEST_CASE("monomial matrices for one qubit") {
  const BinaryTuple one(1, 1), zero(0, 1);
  const Matrix z = monomial_matrix(PauliMonomial(one, zero));
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
  CHECK(z(0, 1) == Complex(0, 0));
  const Matrix x = monomial_matrix(PauliMonomial(zero, one));
  CHECK(x(0, 1) == Complex(1, 0));
  CHECK(x(1, 0) == Complex(1, 0));
  CHECK(x(0, 0) == Complex(0, 0));
}

TEST_CASE("monomial trace orthogonality at N=2") {
  // Tr(Z_u X_l Z_u' X_l') = 2^N (-1)^{l.u'} delta_{uu'} delta_{ll'}
  const int n = 2;
  for (std::uint32_t u = 0; u < 4; ++u) {
    for (std::uint32_t l = 0; l < 4; ++l) {
      const Matrix m1 =
          monomial_matrix(PauliMonomial(BinaryTuple(u, n), BinaryTuple(l, n)));
      for (std::uint32_t u2 = 0; u2 < 4; ++u2) {
        for (std::uint32_t l2 = 0; l2 < 4; ++l2) {
          const Matrix m2 = monomial_matrix(
              PauliMonomial(BinaryTuple(u2, n), BinaryTuple(l2, n)));
          Complex expected(0, 0);
          if (u == u2 && l == l2) {
            expected = (std::popcount(l & u2) & 1) ? -4.0 : 4.0;
          }
          CHECK(std::abs((m1 * m2).trace() - expected) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("monomials are unitary with exact entries") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t dim = 1u << n;
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        const Matrix m =
            monomial_matrix(PauliMonomial(BinaryTuple(a, n), BinaryTuple(b, n)));
        CHECK(max_abs(m * m.adjoint() - Matrix::Identity(dim, dim)) == 0.0);
      }
    }
  }
}

TEST_CASE("monomial action applies X before Z") {
  // Z_a X_b |k> = (-1)^{a.(k+b)} |k+b>; column k holds the sign of row k^b.
  const int n = 3;
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      const Matrix m =
          monomial_matrix(PauliMonomial(BinaryTuple(a, n), BinaryTuple(b, n)));
      for (std::uint32_t k = 0; k < 8; ++k) {
        const double sign = (std::popcount(a & (k ^ b)) & 1) ? -1.0 : 1.0;
        CHECK(m(k ^ b, k) == Complex(sign, 0.0));
      }
    }
  }
}

TEST_CASE("monomial capacity cap") {
  CHECK_THROWS_AS(
      monomial_matrix(PauliMonomial(BinaryTuple(0, 11), BinaryTuple(0, 11))),
      CapacityError);
  // override allows going past the default
  CHECK_NOTHROW(
      monomial_matrix(PauliMonomial(BinaryTuple(0, 11), BinaryTuple(0, 11)),
                      12));
}

TEST_CASE("triple enumeration") {
  const auto triples1 = enumerate_triples(1);
  REQUIRE(triples1.size() == 4);
  CHECK(triples1[0] == HammingTriple{0, 0, 0});
  CHECK(triples1[1] == HammingTriple{0, 1, 1});
  CHECK(triples1[2] == HammingTriple{1, 0, 1});
  CHECK(triples1[3] == HammingTriple{1, 1, 0});

  CHECK(enumerate_triples(2).size() == 10);
  CHECK(enumerate_triples(5).size() == 56);

  for (int n = 1; n <= 8; ++n) {
    const auto triples = enumerate_triples(n);
    CHECK(static_cast<std::int64_t>(triples.size()) ==
          static_cast<std::int64_t>(n + 1) * (n + 2) * (n + 3) / 6);
    CHECK(std::is_sorted(triples.begin(), triples.end()));
  }
}

TEST_CASE("admissibility equals realizability") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t dim = 1u << n;
    std::set<HammingTriple> realized;
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        realized.insert(weights_of(BinaryTuple(a, n), BinaryTuple(b, n)));
      }
    }
    for (int m = 0; m <= n; ++m) {
      for (int nn = 0; nn <= n; ++nn) {
        for (int k = 0; k <= n; ++k) {
          const HammingTriple t{m, nn, k};
          CHECK(admissible(n, t) == (realized.count(t) == 1));
        }
      }
    }
  }
}

TEST_CASE("r_mnk") {
  CHECK(r_mnk(1, {0, 0, 0}) == 1);
  CHECK(r_mnk(7, {0, 0, 0}) == 1);
  CHECK(r_mnk(2, {1, 1, 0}) == 2);
  CHECK(r_mnk(2, {1, 1, 2}) == 2);
  CHECK_THROWS_AS(r_mnk(2, {1, 1, 1}), DomainError);

  // brute-force pair count, exhaustive through N=5
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t dim = 1u << n;
    std::map<HammingTriple, std::int64_t> counts;
    for (std::uint32_t a = 0; a < dim; ++a) {
      for (std::uint32_t b = 0; b < dim; ++b) {
        counts[weights_of(BinaryTuple(a, n), BinaryTuple(b, n))] += 1;
      }
    }
    std::int64_t total = 0;
    for (const auto& t : enumerate_triples(n)) {
      CHECK(r_mnk(n, t) == counts.at(t));
      total += r_mnk(n, t);
    }
    CHECK(total == (1LL << (2 * n)));
  }
}

TEST_CASE("representative pairs realize their triples") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_triples(n)) {
      for (int variant : {0, 1}) {
        const auto [alpha, beta] = representative_pair(n, t, variant);
        CHECK(weights_of(alpha, beta) == t);
      }
    }
  }
}

TEST_CASE("i_power") {
  CHECK(i_power(0) == Complex(1, 0));
  CHECK(i_power(1) == Complex(0, 1));
  CHECK(i_power(2) == Complex(-1, 0));
  CHECK(i_power(-1) == Complex(0, -1));
  CHECK(i_power(-2) == Complex(-1, 0));
  CHECK(i_power(7) == Complex(0, -1));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(20, 10) == 184756);
}
