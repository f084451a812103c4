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

#ifndef LUCAS_TESTS_SUPPORT_HPP
#define LUCAS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "lucas/construct.hpp"
#include "lucas/exact_matrix.hpp"

namespace lucas::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261018);
  return gen;
}

inline ExactInt random_int(long lo, long hi) {
  return ExactInt(std::uniform_int_distribution<long>(lo, hi)(rng()));
}

inline LucasParams random_params(std::size_t level, long bound = 50) {
  LucasParams p;
  for (std::size_t i = 0; i < level; ++i)
    p.triples.push_back({random_int(-bound, bound), random_int(-bound, bound), random_int(-bound, bound)});
  return p;
}

// A random natural assignment; signs are kept positive when `frierson`.
inline LucasParams random_natural(std::size_t level, bool frierson = false) {
  std::vector<long> values;
  for (std::size_t i = 0, p = 1; i < 2 * level; ++i, p *= 3) values.push_back(static_cast<long>(p));
  std::shuffle(values.begin(), values.end(), rng());
  LucasParams p;
  for (std::size_t i = 0; i < level; ++i) {
    long v = values[2 * i], y = values[2 * i + 1];
    const long c = v + y;
    if (!frierson) {
      if (rng()() & 1) v = -v;
      if (rng()() & 1) y = -y;
    }
    p.triples.push_back({c, v, y});
  }
  return p;
}

inline SquareMatrix rows(std::initializer_list<std::initializer_list<long>> r) {
  std::vector<std::vector<ExactInt>> out;
  for (const auto& row : r) out.emplace_back(row.begin(), row.end());
  return SquareMatrix::from_rows(out);
}

// Magic, FNC-passing, non-natural order-5 square.
inline SquareMatrix m5_counterexample() {
  return rows({{9, 12, 15, 23, 1}, {15, 23, 1, 9, 12}, {1, 9, 12, 15, 23}, {12, 15, 23, 1, 9}, {23, 1, 9, 12, 15}});
}

struct NamedSquare {
  LucasTriple params;
  SquareMatrix matrix;
};

// The eight natural order-3 squares as printed.
inline std::vector<NamedSquare> order3_naturals() {
  return {
      {{4, 3, 1}, rows({{7, 0, 5}, {2, 4, 6}, {3, 8, 1}})},
      {{4, 3, -1}, rows({{7, 2, 3}, {0, 4, 8}, {5, 6, 1}})},
      {{4, -3, -1}, rows({{1, 8, 3}, {6, 4, 2}, {5, 0, 7}})},
      {{4, -3, 1}, rows({{1, 6, 5}, {8, 4, 0}, {3, 2, 7}})},
      {{4, 1, 3}, rows({{5, 0, 7}, {6, 4, 2}, {1, 8, 3}})},
      {{4, 1, -3}, rows({{5, 6, 1}, {0, 4, 8}, {7, 2, 3}})},
      {{4, -1, -3}, rows({{3, 8, 1}, {2, 4, 6}, {7, 0, 5}})},
      {{4, -1, 3}, rows({{3, 2, 7}, {8, 4, 0}, {1, 6, 5}})},
  };
}

}  // namespace lucas::test

#endif  // LUCAS_TESTS_SUPPORT_HPP
