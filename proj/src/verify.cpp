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

#include "lucas/verify.hpp"

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lucas/io.hpp"

namespace lucas {

MagicResult check_magic(const SquareMatrix& m) {
  const std::size_t n = m.order();
  const ExactInt mu = trace(m);
  ExactInt anti = 0;
  for (std::size_t i = 0; i < n; ++i) anti += m(i, n - 1 - i);
  if (anti != mu) return {};
  for (std::size_t i = 0; i < n; ++i) {
    ExactInt row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    if (row != mu || col != mu) return {};
  }
  return {true, mu};
}

bool check_regular(const SquareMatrix& m) {
  const MagicResult mr = check_magic(m);
  if (!mr.magic) throw Error(Errc::precondition, "regularity is defined for magic squares only");
  const std::size_t n = m.order();
  const ExactInt twice = 2 * *mr.summation_index;
  if (twice % n != 0) return false;
  const ExactInt pair_sum = twice / n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) + m(n - 1 - i, n - 1 - j) != pair_sum) return false;
  return true;
}

bool check_natural(const SquareMatrix& m) {
  const std::size_t count = m.order() * m.order();
  std::vector<bool> seen(count, false);
  for (const auto& x : m.elements()) {
    if (x < 0 || x >= count) return false;
    const auto k = x.convert_to<std::size_t>();
    if (seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

ExactInt natural_frobenius_sq(std::size_t n) {
  const ExactInt nn = ExactInt(n) * n;
  return nn * (nn - 1) * (2 * nn - 1) / 6;
}

bool check_fnc(const SquareMatrix& m) { return frobenius_sq(m) == natural_frobenius_sq(m.order()); }

ExactInt fnc_parameter_equation(std::size_t level) {
  return (boost::multiprecision::pow(ExactInt(9), static_cast<unsigned>(2 * level)) - 1) / 8;
}

std::optional<LucasParams> recover_lucas_params(const SquareMatrix& m) {
  const std::size_t level = level_of_order(m.order());
  if (level == 0) return std::nullopt;
  const std::size_t center = (m.order() - 1) / 2;  // every base-3 digit is 1
  const ExactInt c_total = m(center, center);

  LucasParams p;
  ExactInt c_inner = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < level; ++i, stride *= 3) {
    // Digit i of the row/column index moves to 0 (v) or the column digit to 2 (y).
    const ExactInt v = m(center - stride, center - stride) - c_total;
    const ExactInt y = m(center - stride, center + stride) - c_total;
    ExactInt c = abs(v) + abs(y);
    if (i + 1 == level) c = c_total - c_inner;
    c_inner += c;
    p.triples.push_back({c, v, y});
  }
  if (lucas(p) != m) return std::nullopt;
  return p;
}

VerificationReport verify(const SquareMatrix& m, bool recover_params) {
  VerificationReport r;
  r.order = m.order();
  const MagicResult mr = check_magic(m);
  r.is_magic = mr.magic;
  r.summation_index = mr.summation_index;
  r.is_regular = mr.magic && check_regular(m);
  r.frobenius_sq = frobenius_sq(m);
  r.fnc_pass = r.frobenius_sq == natural_frobenius_sq(m.order());
  r.is_natural = check_natural(m);
  r.exact_rank = exact_rank(m);
  if (recover_params) r.lucas_params = recover_lucas_params(m);
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["is_magic"] = r.is_magic;
  j["summation_index"] = r.summation_index ? json_int(*r.summation_index) : nlohmann::json(nullptr);
  j["is_regular"] = r.is_regular;
  j["frobenius_sq"] = json_int(r.frobenius_sq);
  j["fnc_pass"] = r.fnc_pass;
  j["is_natural"] = r.is_natural;
  j["exact_rank"] = r.exact_rank;
  j["lucas_params"] = r.lucas_params ? params_to_json(*r.lucas_params) : nlohmann::json(nullptr);
  return j;
}

}  // namespace lucas
