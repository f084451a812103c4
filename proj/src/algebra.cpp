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

#include "lucas/algebra.hpp"

#include <algorithm>

#include "lucas/error.hpp"
#include "lucas/io.hpp"
#include "lucas/verify.hpp"

namespace lucas {
namespace {

bool is_power_of_three(ExactInt x) {
  if (x <= 0) return false;
  while (x % 3 == 0) x /= 3;
  return x == 1;
}

bool all_zero(const LucasParams& p) {
  for (const auto& t : p.triples)
    if (t.c != 0 || t.v != 0 || t.y != 0) return false;
  return true;
}

LucasParams swapped_levels(const LucasParams& p, bool swap_values) {
  LucasParams q;
  for (auto it = p.triples.rbegin(); it != p.triples.rend(); ++it)
    q.triples.push_back(swap_values ? LucasTriple{it->c, it->y, it->v} : *it);
  return q;
}

}  // namespace

bool commute3_predicate(const LucasTriple& p, const LucasTriple& q) { return p.v * q.y == p.y * q.v; }

bool commute_predicate(const LucasParams& p, const LucasParams& q) {
  if (p.level() != q.level()) throw Error(Errc::order_mismatch, "parameter levels differ");
  for (std::size_t i = 0; i < p.level(); ++i)
    if (!commute3_predicate(p.triples[i], q.triples[i])) return false;
  return true;
}

Commute9Result commute9_predicate(const LucasParams& p, const LucasParams& q) {
  if (p.level() != 2 || q.level() != 2) throw Error(Errc::invalid_argument, "level-2 parameters required");
  Commute9Result r;
  if (q == swapped_levels(p, false)) {
    r.pattern = SwapPattern::levels_swapped;
  } else if (q == swapped_levels(p, true)) {
    r.pattern = SwapPattern::levels_and_values_swapped;
  }
  r.commute = commute_predicate(p, q);
  return r;
}

CommutingPairReport commuting_report(const LucasParams& p, const LucasParams& q) {
  CommutingPairReport r;
  r.left = p;
  r.right = q;
  r.predicted = commute_predicate(p, q);
  r.observed = commutator(lucas(p), lucas(q)).is_zero();
  r.consistent = *r.predicted == r.observed;
  return r;
}

CommutingPairReport commuting_report(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw Error(Errc::order_mismatch, "matrix orders differ");
  CommutingPairReport r;
  r.left = recover_lucas_params(a);
  r.right = recover_lucas_params(b);
  r.observed = commutator(a, b).is_zero();
  if (r.left && r.right) {
    r.predicted = commute_predicate(*r.left, *r.right);
    r.consistent = *r.predicted == r.observed;
  }
  return r;
}

nlohmann::json to_json(const CommutingPairReport& r) {
  nlohmann::json j;
  j["left"] = r.left ? params_to_json(*r.left) : nlohmann::json(nullptr);
  j["right"] = r.right ? params_to_json(*r.right) : nlohmann::json(nullptr);
  j["predicted"] = r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr);
  j["observed"] = r.observed;
  j["consistent"] = r.consistent;
  return j;
}

std::vector<std::pair<std::size_t, std::size_t>> find_commuting_pairs(const std::vector<SquareMatrix>& squares) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (squares[i].order() != squares[j].order()) throw Error(Errc::order_mismatch, "matrix orders differ");
      if (commutator(squares[i], squares[j]).is_zero()) out.emplace_back(i, j);
    }
  }
  return out;
}

std::pair<LucasParams, LucasParams> build_commuting_lucas_pair(const LucasParams& base) {
  const std::size_t level = base.level();
  if (level == 0) throw Error(Errc::invalid_argument, "empty parameter list");
  if (!all_zero(base)) {
    // The top level is {1, 3} up to sign; lower levels use 3^0 .. 3^(2l-3).
    const auto& top = base.triples.back();
    const ExactInt tv = abs(top.v), ty = abs(top.y);
    if (!((tv == 1 && ty == 3) || (tv == 3 && ty == 1)))
      throw Error(Errc::precondition, "top-level v, y must be +-1 and +-3");
    const ExactInt limit = boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(2 * level - 2));
    std::vector<ExactInt> seen;
    for (std::size_t i = 0; i + 1 < level; ++i) {
      for (const ExactInt* x : {&base.triples[i].v, &base.triples[i].y}) {
        const ExactInt m = abs(*x);
        if (!is_power_of_three(m) || m >= limit)
          throw Error(Errc::precondition, "lower-level v, y must be +-3^k with k <= 2l-3");
        if (std::find(seen.begin(), seen.end(), m) != seen.end())
          throw Error(Errc::precondition, "lower-level v, y must be distinct");
        seen.push_back(m);
      }
    }
  }
  LucasParams first = base, second = base;
  const ExactInt top_scale = boost::multiprecision::pow(ExactInt(9), static_cast<unsigned>(level - 1));
  auto& t = first.triples.back();
  t = {t.c * top_scale, t.v * top_scale, t.y * top_scale};
  for (std::size_t i = 0; i + 1 < level; ++i) {
    auto& s = second.triples[i];
    s = {9 * s.c, 9 * s.v, 9 * s.y};
  }
  return {first, second};
}

std::pair<LucasParams, LucasParams> extend_commuting_pair(const std::pair<LucasParams, LucasParams>& pair,
                                                          const LucasTriple& outer) {
  auto out = pair;
  out.first.triples.push_back(outer);
  out.second.triples.push_back(outer);
  return out;
}

CommutingCount count_commuting(const std::vector<SquareMatrix>& squares) {
  CommutingCount c;
  c.matrices = squares.size();
  c.unordered_pairs = find_commuting_pairs(squares).size();
  c.ordered_pairs = 2 * c.unordered_pairs + squares.size();
  return c;
}

std::vector<SquareMatrix> commuting_64_family(const FriersonParams& base) {
  if (base.level() != 2) throw Error(Errc::invalid_argument, "level-2 parameters required");
  const LucasParams plus = base.to_lucas();
  LucasParams minus = plus;
  minus.triples[1].v = -minus.triples[1].v;
  minus.triples[1].y = -minus.triples[1].y;
  std::vector<SquareMatrix> out;
  for (const auto& p : {plus, minus})
    for (const auto& m : phase_images(lucas(p))) out.push_back(m);
  return out;
}

std::size_t count_commuting_64(const FriersonParams& base) {
  return count_commuting(commuting_64_family(base)).ordered_pairs;
}

std::vector<std::pair<std::string, FriersonParams>> frierson9_fundamentals() {
  const int table[12][5] = {
      {'A', 3, 1, 27, 9}, {'B', 27, 1, 9, 3}, {'C', 9, 1, 27, 3}, {'D', 27, 9, 3, 1},
      {'E', 9, 3, 27, 1}, {'F', 27, 3, 9, 1}, {'G', 3, 1, 9, 27}, {'H', 27, 1, 3, 9},
      {'I', 9, 1, 3, 27}, {'J', 9, 27, 3, 1}, {'K', 3, 9, 27, 1}, {'L', 3, 27, 9, 1},
  };
  std::vector<std::pair<std::string, FriersonParams>> out;
  for (const auto& row : table)
    out.emplace_back(std::string(1, static_cast<char>(row[0])),
                     FriersonParams{{{row[1], row[2]}, {row[3], row[4]}}});
  return out;
}

std::vector<LabeledSquare> frierson9_commute_suite() {
  std::vector<LabeledSquare> out;
  for (const auto& [label, f] : frierson9_fundamentals()) {
    const LucasParams p = f.to_lucas();
    out.push_back({label, p, lucas(p)});
  }
  for (const auto& [label, f] : frierson9_fundamentals()) {
    const LucasParams p = apply_phase(f.to_lucas(), Phase::right_cross);
    out.push_back({label + "R", p, lucas(p)});
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> frierson9_expected_pairs() {
  return {{"A", "D"}, {"C", "F"}, {"AR", "DR"}, {"CR", "FR"},
          {"G", "JR"}, {"GR", "J"}, {"I", "LR"}, {"IR", "L"}};
}

}  // namespace lucas
