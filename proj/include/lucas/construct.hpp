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

#ifndef LUCAS_CONSTRUCT_HPP
#define LUCAS_CONSTRUCT_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <tuple>
#include <vector>

#include "lucas/exact_matrix.hpp"

namespace lucas {

struct LucasTriple {
  ExactInt c, v, y;
  friend bool operator==(const LucasTriple&, const LucasTriple&) = default;
  friend bool operator<(const LucasTriple& a, const LucasTriple& b) {
    return std::tie(a.c, a.v, a.y) < std::tie(b.c, b.v, b.y);
  }
};

/// Parameters of a compound Lucas square of order 3^level. Entry 0 is the
/// innermost factor: level 2 with triples {(c,v,y), (d,s,t)} is
/// E3 (x) L3(c,v,y) + L3(d,s,t) (x) E3.
struct LucasParams {
  std::vector<LucasTriple> triples;

  std::size_t level() const noexcept { return triples.size(); }
  ExactInt c_sum() const;
  friend bool operator==(const LucasParams&, const LucasParams&) = default;
  friend bool operator<(const LucasParams& a, const LucasParams& b) { return a.triples < b.triples; }
};

struct FriersonPair {
  ExactInt v, y;
  friend bool operator==(const FriersonPair&, const FriersonPair&) = default;
  friend bool operator<(const FriersonPair& a, const FriersonPair& b) { return std::tie(a.v, a.y) < std::tie(b.v, b.y); }
};

struct FriersonParams {
  std::vector<FriersonPair> pairs;

  std::size_t level() const noexcept { return pairs.size(); }
  /// Zero entries are admitted but cannot appear in a natural square.
  bool has_zero() const;
  LucasParams to_lucas() const;
  friend bool operator==(const FriersonParams&, const FriersonParams&) = default;
  friend bool operator<(const FriersonParams& a, const FriersonParams& b) { return a.pairs < b.pairs; }
};

/// The eight dihedral images of a square. Each is M -> R^l * T^t(M) * R^r
/// where T transposes and R is the cross identity.
enum class Phase : std::uint8_t {
  identity = 0,       // M
  right_cross,        // M R
  left_cross,         // R M
  both_cross,         // R M R
  transpose,          // M^T
  transpose_right,    // M^T R
  left_transpose,     // R M^T
  left_transpose_right,  // R M^T R
};

inline constexpr std::array<Phase, 8> kAllPhases = {
    Phase::identity,  Phase::right_cross,     Phase::left_cross,     Phase::both_cross,
    Phase::transpose, Phase::transpose_right, Phase::left_transpose, Phase::left_transpose_right};

std::string_view phase_name(Phase p);
/// Phase equal to applying `first`, then `second`.
Phase compose(Phase first, Phase second);

/// Order-3 Lucas square; all lines sum to 3c.
SquareMatrix lucas3(const ExactInt& c, const ExactInt& v, const ExactInt& y);
/// L3(v + y, v, y); throws Errc::invalid_argument on negative input.
SquareMatrix frierson3(const ExactInt& v, const ExactInt& y);

/// E3 (x) inner + L3(c, v, y) (x) E_m, where m = order(inner) must be a power
/// of three.
SquareMatrix compound_once(const SquareMatrix& inner, const ExactInt& outer_c,
                           const ExactInt& outer_v, const ExactInt& outer_y);

/// Throws Errc::invalid_argument on an empty parameter list.
SquareMatrix lucas(const LucasParams& params);
/// Throws Errc::invalid_argument on negative or missing parameters.
SquareMatrix frierson(const FriersonParams& params);

SquareMatrix apply_phase(const SquareMatrix& m, Phase p);
/// The same phase acting on parameters: lucas(apply_phase(p, ph)) equals
/// apply_phase(lucas(p), ph).
LucasParams apply_phase(const LucasParams& params, Phase p);

std::array<SquareMatrix, 8> phase_images(const SquareMatrix& m);
/// Phase whose image is lexicographically smallest in row-major order.
Phase canonical_phase_of(const SquareMatrix& m);
SquareMatrix canonical_phase(const SquareMatrix& m);

/// 3^level for small levels; throws if level is too large for size_t.
std::size_t order_of_level(std::size_t level);
/// Level l with 3^l == order, or 0 if order is not a positive power of 3.
std::size_t level_of_order(std::size_t order);

}  // namespace lucas

#endif  // LUCAS_CONSTRUCT_HPP
