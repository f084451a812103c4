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

#include <set>

#include "doctest.h"
#include "lucas/construct.hpp"
#include "lucas/verify.hpp"
#include "support.hpp"

using namespace lucas;
using lucas::test::rows;

TEST_CASE("lucas3") {
  CHECK(lucas3(4, 3, 1) == rows({{7, 0, 5}, {2, 4, 6}, {3, 8, 1}}));
  CHECK(lucas3(0, 0, 0).is_zero());
  CHECK(lucas3(4, -1, -3) == rows({{3, 8, 1}, {2, 4, 6}, {7, 0, 5}}));
  for (const auto& sq : test::order3_naturals())
    CHECK(lucas3(sq.params.c, sq.params.v, sq.params.y) == sq.matrix);
}

TEST_CASE("frierson3") {
  CHECK(frierson3(3, 1) == lucas3(4, 3, 1));
  CHECK(frierson3(0, 0).is_zero());
  CHECK(frierson3(1, 3) == frierson3(3, 1) * cross_identity(3));
  CHECK_THROWS_AS(frierson3(-1, 3), Error);
}

TEST_CASE("compound_once") {
  const auto l9 = compound_once(lucas3(4, 3, 1), 36, 27, 9);
  CHECK(l9 == lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}}}));
  CHECK(check_magic(l9).summation_index == ExactInt(360));
  CHECK(compound_once(SquareMatrix::zeros(3), 0, 0, 0).is_zero());
  CHECK(compound_once(lucas3(4, 3, 1), 0, 0, 0) == kronecker(all_ones(3), lucas3(4, 3, 1)));
  CHECK_THROWS_AS(compound_once(SquareMatrix::zeros(2), 1, 1, 1), Error);
}

TEST_CASE("compound_once matches the A + B block form") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = test::random_params(2);
    const auto& [c, v, y] = p.triples[0];
    const auto& [d, s, t] = p.triples[1];
    const auto a9 = kronecker(all_ones(3), lucas3(0, v, y)) + scalar_mul(c, all_ones(9));
    const auto b9 = kronecker(lucas3(0, s, t), all_ones(3)) + scalar_mul(d, all_ones(9));
    CHECK(lucas::lucas(p) == a9 + b9);
    CHECK(commutator(a9, b9).is_zero());
  }
}

TEST_CASE("lucas") {
  CHECK(lucas::lucas(LucasParams{{{4, 3, 1}}}) == lucas3(4, 3, 1));
  const auto l9 = lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}}});
  CHECK(check_natural(l9));
  CHECK(check_magic(l9).summation_index == ExactInt(360));
  const auto l27 = lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}, {324, 243, 81}}});
  CHECK(l27.order() == 27);
  CHECK(check_natural(l27));
  CHECK(check_magic(l27).summation_index == ExactInt(9828));
  CHECK_THROWS_AS(lucas::lucas(LucasParams{}), Error);
}

TEST_CASE("frierson") {
  const FriersonParams a{{{3, 1}, {27, 9}}};
  CHECK(frierson(a) == lucas::lucas(LucasParams{{{4, 3, 1}, {36, 27, 9}}}));
  // Swapping every pair is the right-cross phase.
  CHECK(frierson(FriersonParams{{{1, 3}, {9, 27}}}) == frierson(a) * cross_identity(9));
  CHECK(frierson(FriersonParams{{{0, 0}}}).is_zero());
  CHECK(FriersonParams{{{0, 4}}}.has_zero());
  CHECK_THROWS_AS(frierson(FriersonParams{{{-3, 1}}}), Error);
}

TEST_CASE("constructed squares are magic, regular and satisfy the trace identity") {
  for (std::size_t level = 1; level <= 3; ++level) {
    for (int trial = 0; trial < (level == 3 ? 5 : 30); ++trial) {
      const auto p = test::random_params(level);
      const auto m = lucas::lucas(p);
      const auto r = check_magic(m);
      REQUIRE(r.magic);
      const ExactInt n = m.order();
      CHECK(*r.summation_index == n * p.c_sum());
      CHECK(trace(m) == n * p.c_sum());
      const auto lhs = m + cross_identity(m.order()) * m * cross_identity(m.order());
      CHECK(lhs == scalar_mul(2 * p.c_sum(), all_ones(m.order())));
      CHECK(check_regular(m));
    }
  }
}

TEST_CASE("lucas and frierson agree up to an offset") {
  for (int trial = 0; trial < 20; ++trial) {
    FriersonParams f;
    LucasParams p;
    ExactInt offset = 0;
    for (int i = 0; i < 2; ++i) {
      const auto v = test::random_int(0, 40), y = test::random_int(0, 40), c = test::random_int(-40, 40);
      f.pairs.push_back({v, y});
      p.triples.push_back({c, v, y});
      offset += c - v - y;
    }
    CHECK(lucas::lucas(f.to_lucas()) == frierson(f));
    CHECK(lucas::lucas(p) == frierson(f) + scalar_mul(offset, all_ones(9)));
  }
}

TEST_CASE("phases") {
  const auto l = lucas3(4, 3, 1);
  CHECK(apply_phase(l, Phase::identity) == l);
  CHECK(apply_phase(l, Phase::transpose) == rows({{7, 2, 3}, {0, 4, 8}, {5, 6, 1}}));
  CHECK(apply_phase(l, Phase::transpose) == lucas3(4, 3, -1));
  CHECK(apply_phase(l, Phase::both_cross) == lucas3(4, -3, -1));
  CHECK(apply_phase(l, Phase::right_cross) == lucas3(4, 1, 3));
  const LucasParams p9{{{4, 3, 1}, {36, 27, 9}}};
  CHECK(apply_phase(p9, Phase::right_cross) == LucasParams{{{4, 1, 3}, {36, 9, 27}}});
}

TEST_CASE("phase images of the order-3 square are the eight naturals") {
  std::set<std::vector<ExactInt>> images, expected;
  for (const auto& m : phase_images(lucas3(4, 3, 1))) images.insert({m.elements().begin(), m.elements().end()});
  for (const auto& sq : test::order3_naturals())
    expected.insert({sq.matrix.elements().begin(), sq.matrix.elements().end()});
  CHECK(images == expected);
}

TEST_CASE("phase action on parameters matches the matrix action") {
  for (std::size_t level = 1; level <= 3; ++level) {
    for (int trial = 0; trial < (level == 3 ? 2 : 10); ++trial) {
      const auto p = test::random_params(level);
      const auto m = lucas::lucas(p);
      for (Phase ph : kAllPhases) CHECK(lucas::lucas(apply_phase(p, ph)) == apply_phase(m, ph));
    }
  }
}

TEST_CASE("phase group closure") {
  for (std::size_t level = 1; level <= 2; ++level) {
    const auto m = lucas::lucas(test::random_params(level));
    std::set<Phase> composed;
    for (Phase a : kAllPhases) {
      for (Phase b : kAllPhases) {
        const Phase ab = compose(a, b);
        composed.insert(ab);
        CHECK(apply_phase(apply_phase(m, a), b) == apply_phase(m, ab));
      }
    }
    CHECK(composed.size() == 8);
  }
  for (Phase a : kAllPhases) {
    CHECK(compose(a, Phase::identity) == a);
    int inverses = 0;
    for (Phase b : kAllPhases) inverses += compose(a, b) == Phase::identity;
    CHECK(inverses == 1);
  }
}

TEST_CASE("canonical phase") {
  const auto l = lucas3(4, 3, 1);
  std::set<std::vector<ExactInt>> reps;
  for (const auto& sq : test::order3_naturals()) {
    const auto c = canonical_phase(sq.matrix);
    reps.insert({c.elements().begin(), c.elements().end()});
  }
  CHECK(reps.size() == 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = lucas::lucas(test::random_params(2));
    const auto c = canonical_phase(m);
    CHECK(canonical_phase(c) == c);
    for (Phase ph : kAllPhases) CHECK(canonical_phase(apply_phase(m, ph)) == c);
    for (const auto& img : phase_images(m))
      CHECK(!std::lexicographical_compare(img.elements().begin(), img.elements().end(), c.elements().begin(),
                                          c.elements().end()));
  }
  CHECK(canonical_phase(l) == rows({{1, 6, 5}, {8, 4, 0}, {3, 2, 7}}));
}

TEST_CASE("levels and orders") {
  CHECK(order_of_level(0) == 1);
  CHECK(order_of_level(3) == 27);
  CHECK(level_of_order(81) == 4);
  CHECK(level_of_order(1) == 0);
  CHECK(level_of_order(12) == 0);
}
