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

#ifndef LUCAS_VERIFY_HPP
#define LUCAS_VERIFY_HPP

#include <optional>

#include "json.hpp"
#include "lucas/construct.hpp"
#include "lucas/exact_matrix.hpp"

namespace lucas {

struct MagicResult {
  bool magic = false;
  std::optional<ExactInt> summation_index;  // set iff magic
};

/// All n row sums, n column sums and both diagonal sums agree.
MagicResult check_magic(const SquareMatrix& m);

/// M + R M R == (2 mu / n) E. Throws Errc::precondition when m is not magic;
/// returns false when 2 mu is not a multiple of n.
bool check_regular(const SquareMatrix& m);

/// Elements are exactly 0, 1, ..., n^2 - 1 (counting sort).
bool check_natural(const SquareMatrix& m);

/// Sum of k^2 for k < n^2, i.e. n^2 (n^2 - 1)(2 n^2 - 1) / 6.
ExactInt natural_frobenius_sq(std::size_t n);
/// Necessary condition for naturalness: frobenius_sq(m) equals the above.
bool check_fnc(const SquareMatrix& m);

/// Required sum of (v_i^2 + y_i^2) over all levels for a compound Lucas
/// square of the given level to pass the Frobenius screen:
/// (9^(2 level) - 1) / 8.
ExactInt fnc_parameter_equation(std::size_t level);

/// Reads v_i, y_i off the probe positions of each level and rebuilds the
/// square to confirm membership. Only the sum of the c_i is determined by
/// the matrix; the recovered triples use c_i = |v_i| + |y_i| below the top
/// level and put the remainder in the top level.
std::optional<LucasParams> recover_lucas_params(const SquareMatrix& m);

struct VerificationReport {
  std::size_t order = 0;
  bool is_magic = false;
  std::optional<ExactInt> summation_index;
  bool is_regular = false;  // false also when not magic
  ExactInt frobenius_sq = 0;
  bool fnc_pass = false;
  bool is_natural = false;
  std::size_t exact_rank = 0;
  std::optional<LucasParams> lucas_params;
};

VerificationReport verify(const SquareMatrix& m, bool recover_params = true);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace lucas

#endif  // LUCAS_VERIFY_HPP
