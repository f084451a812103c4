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

#ifndef LUCAS_ENUMERATE_HPP
#define LUCAS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lucas/construct.hpp"

namespace lucas {

enum class Family { lucas, frierson };

std::string_view family_name(Family f);
/// "lucas" or "frierson"; throws Errc::parse_error otherwise.
Family parse_family(std::string_view name);

// Natural compound squares of level l take v_i, y_i from the distinct powers
// 3^0 .. 3^(2l-1) in any order (with any signs for the Lucas family) and
// c_i = |v_i| + |y_i|.

/// 2^(2l) (2l)! for Lucas, (2l)! for Frierson.
ExactInt assignment_count(std::size_t level, Family family);

/// Visits every natural assignment. Assignments whose first value index is
/// `first_value` are visited when that argument is set, which lets callers
/// split the stream across workers.
void for_each_natural_assignment(std::size_t level, Family family,
                                 const std::function<void(const LucasParams&)>& visit,
                                 std::optional<std::size_t> first_value = std::nullopt);
std::vector<LucasParams> natural_parameter_assignments(std::size_t level, Family family);

struct EnumerationOptions {
  /// Highest level that is materialized and deduplicated square by square.
  std::size_t ceiling = 3;
  /// Representatives are requested; above the ceiling this is an error.
  bool emit = false;
  /// 0 = one per hardware thread.
  unsigned workers = 0;
};

struct EnumerationResult {
  std::size_t level = 0;
  Family family = Family::lucas;
  ExactInt total_assignments = 0;
  ExactInt fundamental_count = 0;
  ExactInt formula_fundamental_count = 0;
  bool materialized = false;
  /// Every materialized square passed the naturalness check.
  bool all_natural = false;
  /// Canonical-phase parameters, sorted. Empty unless materialized.
  std::vector<LucasParams> representatives;
  ExactInt sv_class_count = 0;
  /// (2l)! / 2^l: the Frierson count under the convention that also
  /// identifies the squares whose level pairs are swapped.
  ExactInt loly_cameron_frierson_count = 0;
};

/// Builds `samples` random natural assignments and checks each square is
/// natural. Covers levels above the materialization ceiling.
bool sample_naturalness(std::size_t level, Family family, std::size_t samples, std::uint64_t seed);

EnumerationResult enumerate_fundamental(std::size_t level, Family family,
                                        const EnumerationOptions& options = {});
nlohmann::json to_json(const EnumerationResult& r, bool with_representatives);

/// Sets of 2l positive integers whose squares sum to (9^(2l) - 1) / 8,
/// ascending. Levels 1..2.
std::vector<std::vector<ExactInt>> fnc_integer_solutions(std::size_t level, bool distinct = true);
/// The subset of the above that can fill the v_i, y_i of a natural level-l
/// square: the values also sum to (3^(2l) - 1) / 2, the largest element
/// offset of a natural regular square. Levels 1..3.
std::vector<std::vector<ExactInt>> natural_value_solutions(std::size_t level);

/// All elements of lucas(params) are distinct.
bool duplicate_element_check(const LucasParams& params);
/// sum_i a_i 3^i over a in {-1, 0, 1}^(2l) takes 3^(2l) distinct values,
/// i.e. no nonzero digit difference eta in {-2..2} sums to zero.
bool ternary_offsets_distinct(std::size_t level);

/// (2l - 1)!!
ExactInt sv_class_count(std::size_t level);
/// Distinct singular-value multisets over the fundamental Frierson squares.
std::size_t materialized_sv_class_count(std::size_t level);

struct CensusRow {
  std::size_t level = 0;
  ExactInt order, mu, lucas_fundamental, frierson_fundamental, sv_classes;
  std::size_t rank = 0;
};

CensusRow census(std::size_t level);

}  // namespace lucas

#endif  // LUCAS_ENUMERATE_HPP
