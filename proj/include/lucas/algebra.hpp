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

#ifndef LUCAS_ALGEBRA_HPP
#define LUCAS_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lucas/construct.hpp"

namespace lucas {

/// L3(c,v,y) and L3(d,s,t) commute iff v t == y s.
bool commute3_predicate(const LucasTriple& p, const LucasTriple& q);

/// Same-level compound squares commute iff v_i t_i == y_i s_i at every
/// level: the level-i parts have zero line sums, so products of different
/// levels vanish. Throws Errc::order_mismatch on a level mismatch.
bool commute_predicate(const LucasParams& p, const LucasParams& q);

enum class SwapPattern {
  none,
  /// q = (d,s,t,c,v,y); commutes iff v t == y s.
  levels_swapped,
  /// q = (d,t,s,c,y,v); commutes iff v s == y t.
  levels_and_values_swapped,
};

struct Commute9Result {
  bool commute = false;
  SwapPattern pattern = SwapPattern::none;
};

/// Level-2 predicate. Reports which swap pattern q has relative to p, if
/// any; the verdict itself is the per-level rule.
Commute9Result commute9_predicate(const LucasParams& p, const LucasParams& q);

struct CommutingPairReport {
  std::optional<LucasParams> left, right;
  /// Absent when either side is not a compound Lucas square.
  std::optional<bool> predicted;
  bool observed = false;
  bool consistent = true;
};

CommutingPairReport commuting_report(const LucasParams& p, const LucasParams& q);
/// Parameters are recovered from the matrices where possible.
CommutingPairReport commuting_report(const SquareMatrix& a, const SquareMatrix& b);
nlohmann::json to_json(const CommutingPairReport& r);

/// Unordered index pairs i < j with a zero commutator.
std::vector<std::pair<std::size_t, std::size_t>> find_commuting_pairs(const std::vector<SquareMatrix>& squares);

/// L' scales the top level by 9^(l-1), L'' scales every lower level by 9.
/// Lower-level v_i, y_i must be distinct powers 3^k (k <= 2l - 3) up to
/// sign, and the top level must be {1, 3} up to sign. An all-zero base is
/// accepted and yields zero matrices.
std::pair<LucasParams, LucasParams> build_commuting_lucas_pair(const LucasParams& base);
/// Appends the same outer triple to both members of a commuting pair.
std::pair<LucasParams, LucasParams> extend_commuting_pair(const std::pair<LucasParams, LucasParams>& pair,
                                                          const LucasTriple& outer);

struct CommutingCount {
  std::size_t matrices = 0;
  std::size_t unordered_pairs = 0;
  /// Ordered pairs (A, B) with [A, B] = 0, including A == B.
  std::size_t ordered_pairs = 0;
};

CommutingCount count_commuting(const std::vector<SquareMatrix>& squares);
/// The forms (v,y,s,t) and (v,y,-s,-t) of a level-2 square with
/// nonnegative v, y, s, t together with their eight phases each.
std::vector<SquareMatrix> commuting_64_family(const FriersonParams& base);
/// ordered_pairs of count_commuting(commuting_64_family(base)).
std::size_t count_commuting_64(const FriersonParams& base);

struct LabeledSquare {
  std::string label;
  LucasParams params;
  SquareMatrix matrix;
};

/// The twelve fundamental level-2 Frierson squares, labels "A".."L".
std::vector<std::pair<std::string, FriersonParams>> frierson9_fundamentals();
/// The twelve plus their right-cross phases ("AR".."LR").
std::vector<LabeledSquare> frierson9_commute_suite();
/// Label pairs that commute within the suite.
std::vector<std::pair<std::string, std::string>> frierson9_expected_pairs();

}  // namespace lucas

#endif  // LUCAS_ALGEBRA_HPP
