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

#include <map>
#include <set>

#include "doctest.h"
#include "lucas/algebra.hpp"
#include "lucas/construct.hpp"
#include "lucas/enumerate.hpp"
#include "lucas/spectra.hpp"
#include "lucas/verify.hpp"
#include "support.hpp"

using namespace lucas;

namespace {

using LabelPair = std::pair<std::string, std::string>;

std::set<LabelPair> found_pairs(const std::vector<LabeledSquare>& suite) {
  std::vector<SquareMatrix> squares;
  for (const auto& s : suite) squares.push_back(s.matrix);
  std::set<LabelPair> out;
  for (auto [i, j] : find_commuting_pairs(squares)) out.insert(std::minmax(suite[i].label, suite[j].label));
  return out;
}

}  // namespace

TEST_CASE("order-3 predicate") {
  CHECK(commute3_predicate({4, 3, 1}, {4, -3, -1}));
  CHECK_FALSE(commute3_predicate({4, 3, 1}, {4, 1, 3}));
  for (int i = 0; i < 20; ++i) {
    const auto p = test::random_params(1).triples[0];
    CHECK(commute3_predicate(p, p));
  }
}

TEST_CASE("order-3 predicate agrees with the commutator") {
  for (int i = 0; i < 500; ++i) {
    // Small ranges make commuting pairs common.
    const auto p = test::random_params(1, 4), q = test::random_params(1, 4);
    const bool observed = commutator(lucas::lucas(p), lucas::lucas(q)).is_zero();
    CHECK(commute3_predicate(p.triples[0], q.triples[0]) == observed);
  }
}

TEST_CASE("general predicate agrees with the commutator") {
  for (std::size_t level = 2; level <= 3; ++level) {
    for (int i = 0; i < (level == 2 ? 200 : 20); ++i) {
      auto p = test::random_params(level, 3), q = test::random_params(level, 3);
      // Force agreement at a random subset of levels.
      for (std::size_t k = 0; k < level; ++k)
        if (test::rng()() & 1) q.triples[k] = {q.triples[k].c, 2 * p.triples[k].v, 2 * p.triples[k].y};
      const auto r = commuting_report(p, q);
      CHECK(r.consistent);
    }
  }
  CHECK_THROWS_AS(commute_predicate(test::random_params(1), test::random_params(2)), Error);
}

TEST_CASE("level-2 swap patterns") {
  const LucasParams p{{{4, 3, 1}, {36, 27, 9}}};
  auto r = commute9_predicate(p, LucasParams{{{36, 27, 9}, {4, 3, 1}}});
  CHECK(r.pattern == SwapPattern::levels_swapped);
  CHECK(r.commute);
  r = commute9_predicate(p, LucasParams{{{36, 9, 27}, {4, 1, 3}}});
  CHECK(r.pattern == SwapPattern::levels_and_values_swapped);
  CHECK_FALSE(r.commute);
  const LucasParams g{{{4, 3, 1}, {36, 9, 27}}};
  r = commute9_predicate(g, LucasParams{{{36, 27, 9}, {4, 1, 3}}});
  CHECK(r.pattern == SwapPattern::levels_and_values_swapped);
  CHECK(r.commute);

  const auto fund = frierson9_fundamentals();
  std::map<std::string, LucasParams> f;
  for (const auto& [label, params] : fund) f[label] = params.to_lucas();
  CHECK(commute9_predicate(f["A"], f["D"]).commute);
  CHECK(commute9_predicate(f["C"], f["F"]).commute);
  CHECK_FALSE(commute9_predicate(f["A"], f["B"]).commute);
  CHECK_FALSE(commutator(lucas::lucas(f["A"]), lucas::lucas(f["B"])).is_zero());
}

TEST_CASE("commuting pairs among the order-3 naturals") {
  std::vector<SquareMatrix> squares;
  std::vector<LucasTriple> params;
  for (const auto& sq : test::order3_naturals()) {
    squares.push_back(sq.matrix);
    params.push_back(sq.params);
  }
  const auto pairs = find_commuting_pairs(squares);
  REQUIRE(pairs.size() == 4);
  std::set<std::pair<LucasTriple, LucasTriple>> got;
  for (auto [i, j] : pairs) got.insert(std::minmax(params[i], params[j]));
  const std::set<std::pair<LucasTriple, LucasTriple>> expected = {
      std::minmax(LucasTriple{4, 1, 3}, LucasTriple{4, -1, -3}),
      std::minmax(LucasTriple{4, 1, -3}, LucasTriple{4, -1, 3}),
      std::minmax(LucasTriple{4, 3, 1}, LucasTriple{4, -3, -1}),
      std::minmax(LucasTriple{4, 3, -1}, LucasTriple{4, -3, 1}),
  };
  CHECK(got == expected);
  CHECK(find_commuting_pairs({squares[0]}).empty());
  CHECK_THROWS_AS(find_commuting_pairs({all_ones(3), all_ones(9)}), Error);
}

TEST_CASE("commuting pairs in the labeled level-2 suite") {
  const auto suite = frierson9_commute_suite();
  CHECK(suite.size() == 24);
  std::set<LabelPair> expected;
  for (auto [a, b] : frierson9_expected_pairs()) expected.insert(std::minmax(a, b));
  CHECK(expected.size() == 8);
  CHECK(found_pairs(suite) == expected);
}

TEST_CASE("commuting pairs stay commuting under like phases") {
  const auto suite = frierson9_commute_suite();
  for (const auto& [a, b] : found_pairs(suite)) {
    const auto& x = *std::find_if(suite.begin(), suite.end(), [&](const auto& s) { return s.label == a; });
    const auto& y = *std::find_if(suite.begin(), suite.end(), [&](const auto& s) { return s.label == b; });
    for (Phase ph : kAllPhases) CHECK(commutator(apply_phase(x.matrix, ph), apply_phase(y.matrix, ph)).is_zero());
  }
}

TEST_CASE("commuting level-2 squares share eigenvectors") {
  for (const auto& [label, f] : frierson9_fundamentals()) {
    const auto p = f.to_lucas();
    const auto& [c, v, y] = p.triples[0];
    const auto& [d, s, t] = p.triples[1];
    const LucasParams swapped{{{d, s, t}, {c, v, y}}};
    const LucasParams crossed{{{d, t, s}, {c, y, v}}};
    if (v * t == y * s) {
      CHECK(jcf_matrices(p).s == jcf_matrices(swapped).s);
      CHECK(commutator(lucas::lucas(p), lucas::lucas(swapped)).is_zero());
    }
    if (v * s == y * t) {
      CHECK(jcf_matrices(p).s == jcf_matrices(crossed).s);
      CHECK(commutator(lucas::lucas(p), lucas::lucas(crossed)).is_zero());
    }
  }
}

TEST_CASE("scaled commuting construction") {
  auto [a, b] = build_commuting_lucas_pair(LucasParams{{{4, 1, 3}, {4, 3, 1}}});
  CHECK(a == FriersonParams{{{1, 3}, {27, 9}}}.to_lucas());
  CHECK(b == FriersonParams{{{9, 27}, {3, 1}}}.to_lucas());
  CHECK(commutator(lucas::lucas(a), lucas::lucas(b)).is_zero());
  CHECK(check_natural(lucas::lucas(a)));
  CHECK(check_natural(lucas::lucas(b)));

  for (int trial = 0; trial < 5; ++trial) {
    // Lower levels from +-1..+-27, top level from +-1, +-3.
    LucasParams base = test::random_natural(2);
    const long top[2][2] = {{1, 3}, {3, 1}};
    const auto& pick = top[test::rng()() & 1];
    long v = pick[0], y = pick[1];
    if (test::rng()() & 1) v = -v;
    if (test::rng()() & 1) y = -y;
    base.triples.push_back({4, v, y});
    auto [p, q] = build_commuting_lucas_pair(base);
    CHECK(commutator(lucas::lucas(p), lucas::lucas(q)).is_zero());
    CHECK(check_natural(lucas::lucas(p)));
    CHECK(check_natural(lucas::lucas(q)));
  }

  auto [z1, z2] = build_commuting_lucas_pair(LucasParams{{{0, 0, 0}, {0, 0, 0}}});
  CHECK(lucas::lucas(z1).is_zero());
  CHECK(lucas::lucas(z2).is_zero());
  CHECK_THROWS_AS(build_commuting_lucas_pair(LucasParams{{{4, 1, 3}, {10, 9, 1}}}), Error);
  CHECK_THROWS_AS(build_commuting_lucas_pair(LucasParams{{{4, 1, 3}, {4, 3, 1}, {4, 3, 1}}}), Error);
  CHECK_THROWS_AS(build_commuting_lucas_pair(LucasParams{{{6, 2, 4}, {4, 3, 1}}}), Error);
}

TEST_CASE("extended commuting pair at level 3") {
  const auto pair = std::make_pair(FriersonParams{{{1, 3}, {27, 9}}}.to_lucas(),
                                   FriersonParams{{{9, 27}, {3, 1}}}.to_lucas());
  auto [a, b] = extend_commuting_pair(pair, {324, 81, 243});
  CHECK(a == FriersonParams{{{1, 3}, {27, 9}, {81, 243}}}.to_lucas());
  CHECK(b == FriersonParams{{{9, 27}, {3, 1}, {81, 243}}}.to_lucas());
  CHECK(commutator(lucas::lucas(a), lucas::lucas(b)).is_zero());
  CHECK(check_natural(lucas::lucas(a)));
  CHECK(check_natural(lucas::lucas(b)));
}

TEST_CASE("sixty-four commuting pairs") {
  const auto fund = frierson9_fundamentals();
  for (const auto& [label, f] : fund) {
    const auto c = count_commuting(commuting_64_family(f));
    CHECK(c.matrices == 16);
    CHECK(c.ordered_pairs == 64);
    CHECK(c.unordered_pairs == 24);
  }
  CHECK(count_commuting_64(fund[0].second) == 64);
  const auto single = count_commuting({lucas3(4, 3, 1)});
  CHECK(single.unordered_pairs == 0);
}

TEST_CASE("matrix commuting report") {
  const auto r = commuting_report(frierson(FriersonParams{{{3, 1}, {27, 9}}}),
                                  frierson(FriersonParams{{{27, 9}, {3, 1}}}));
  CHECK(r.observed);
  REQUIRE(r.predicted.has_value());
  CHECK(*r.predicted);
  CHECK(r.consistent);
  const auto m5 = test::m5_counterexample();
  const auto s = commuting_report(m5, m5);
  CHECK(s.observed);
  CHECK_FALSE(s.predicted.has_value());
  CHECK(to_json(s)["predicted"].is_null());
}
