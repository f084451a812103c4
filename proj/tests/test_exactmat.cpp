// Copyright 2026 The lucasmagic Authors
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

#include "doctest.h"
#include "lucas/construct.hpp"
#include "lucas/exact_matrix.hpp"
#include "lucas/spectra.hpp"
#include "support.hpp"

using namespace lucas;
using lucas::test::rows;

namespace {

SquareMatrix random_matrix(std::size_t n, long bound = 20) {
  std::vector<ExactInt> e;
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(test::random_int(-bound, bound));
  return SquareMatrix(n, std::move(e));
}

}  // namespace

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(SquareMatrix(2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(SquareMatrix(0, {}), Error);
  CHECK_THROWS_AS(SquareMatrix::from_rows({{1, 2}, {3}}), Error);
}

TEST_CASE("all_ones") {
  CHECK(all_ones(1) == rows({{1}}));
  CHECK(all_ones(3) == rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  const auto e9 = all_ones(9);
  for (std::size_t r = 0; r < 9; ++r) {
    ExactInt s = 0;
    for (const auto& x : e9.row(r)) s += x;
    CHECK(s == 9);
  }
}

TEST_CASE("cross_identity") {
  CHECK(cross_identity(1) == rows({{1}}));
  CHECK(cross_identity(3) == rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  for (std::size_t n = 1; n <= 81; ++n) CHECK(cross_identity(n) * cross_identity(n) == SquareMatrix::identity(n));
}

TEST_CASE("kronecker") {
  const auto m = random_matrix(3);
  CHECK(kronecker(all_ones(1), m) == m);
  CHECK(kronecker(SquareMatrix::identity(2), SquareMatrix::identity(3)) == SquareMatrix::identity(6));

  const auto a9 = kronecker(all_ones(3), lucas3(4, 3, 1));
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) CHECK(a9(r, c) == lucas3(4, 3, 1)(r % 3, c % 3));
}

TEST_CASE("kronecker is associative and mixed-product compatible") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_matrix(3), b = random_matrix(3), c = random_matrix(1 + trial % 3);
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
    const auto d = random_matrix(3), e = random_matrix(3);
    CHECK(kronecker(a, b) * kronecker(d, e) == kronecker(a * d, b * e));
  }
}

TEST_CASE("arithmetic and trace") {
  CHECK(trace(SquareMatrix::identity(3)) == 3);
  CHECK(trace(lucas3(4, 3, 1)) == 12);
  CHECK(trace(cross_identity(3) * lucas3(4, 3, 1)) == 12);
  CHECK_THROWS_AS(matmul(all_ones(2), all_ones(3)), Error);
  CHECK_THROWS_AS(add(all_ones(2), all_ones(3)), Error);
  const auto m = random_matrix(4);
  CHECK(transpose(transpose(m)) == m);
  CHECK(m + m == scalar_mul(2, m));
  CHECK((m - m).is_zero());
}

TEST_CASE("power by squaring matches repeated products") {
  const auto m = random_matrix(3, 5);
  SquareMatrix acc = m;
  for (unsigned k = 2; k <= 7; ++k) {
    acc = acc * m;
    CHECK(power(m, k) == acc);
  }
  CHECK(power(m, 0) == SquareMatrix::identity(3));
}

TEST_CASE("arbitrary precision") {
  const auto big = power(lucas3(10, 7, 2), 40);
  CHECK(big(1, 1) > ExactInt(1) << 120);
  CHECK(power(lucas3(10, 7, 2), 41) == big * lucas3(10, 7, 2));
}

TEST_CASE("commutator") {
  const auto m = random_matrix(5);
  CHECK(commutator(m, m).is_zero());
  CHECK(commutator(kronecker(all_ones(3), lucas3(4, 3, 1)), kronecker(lucas3(36, 27, 9), all_ones(3))).is_zero());
  CHECK_FALSE(commutator(frierson3(3, 1), frierson3(1, 3)).is_zero());
  CHECK_THROWS_AS(commutator(all_ones(2), all_ones(3)), Error);
}

TEST_CASE("frobenius_sq") {
  CHECK(frobenius_sq(SquareMatrix::zeros(4)) == 0);
  CHECK(frobenius_sq(test::m5_counterexample()) == 4900);
  CHECK(frobenius_sq(lucas3(4, 3, 1)) == 204);
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto m = random_matrix(n);
    CHECK(frobenius_sq(m) == trace(m * transpose(m)));
  }
}

TEST_CASE("exact_rank") {
  CHECK(exact_rank(all_ones(5)) == 1);
  CHECK(exact_rank(SquareMatrix::zeros(3)) == 0);
  CHECK(exact_rank(SquareMatrix::identity(7)) == 7);
  CHECK(exact_rank(rows({{0, 1, 2}, {0, 2, 4}, {0, 0, 1}})) == 2);
  CHECK(exact_rank(lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}}})) == 5);
  CHECK(exact_rank(lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}, {324, 243, 81}}})) == 7);
}

TEST_CASE("exact_rank agrees with nonzero singular values") {
  for (std::size_t level = 1; level <= 3; ++level) {
    for (int trial = 0; trial < (level == 3 ? 3 : 20); ++trial) {
      // Small bounds make degenerate v = +-y and zero sums likely.
      const auto p = test::random_params(level, 3);
      std::size_t nonzero = 0;
      for (const auto& s : singular_values(p)) nonzero += !s.is_zero();
      CHECK(exact_rank(lucas::lucas(p)) == nonzero);
    }
  }
}

TEST_CASE("rational matrices") {
  const auto r = RationalMatrix::from(SquareMatrix::identity(3));
  CHECK(r.is_identity());
  CHECK(matmul(r, r) == r);
  CHECK_FALSE(RationalMatrix::from(all_ones(2)).is_identity());
}
