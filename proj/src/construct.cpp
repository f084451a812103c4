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

#include "lucas/construct.hpp"

#include <limits>
#include <string>
#include <utility>

namespace lucas {
namespace {

struct PhaseBits {
  bool transpose, left, right;
};

PhaseBits bits(Phase p) {
  const auto v = static_cast<unsigned>(p);
  return {(v & 4u) != 0, (v & 2u) != 0, (v & 1u) != 0};
}

Phase from_bits(bool t, bool l, bool r) {
  return static_cast<Phase>((t ? 4u : 0u) | (l ? 2u : 0u) | (r ? 1u : 0u));
}

// Row-major element k of the image of m under p, without materializing it.
const ExactInt& image_element(const SquareMatrix& m, PhaseBits b, std::size_t i, std::size_t j) {
  const std::size_t n = m.order();
  const std::size_t si = b.left ? n - 1 - i : i;
  const std::size_t sj = b.right ? n - 1 - j : j;
  return b.transpose ? m(sj, si) : m(si, sj);
}

}  // namespace

ExactInt LucasParams::c_sum() const {
  ExactInt s = 0;
  for (const auto& t : triples) s += t.c;
  return s;
}

bool FriersonParams::has_zero() const {
  for (const auto& p : pairs)
    if (p.v == 0 || p.y == 0) return true;
  return false;
}

LucasParams FriersonParams::to_lucas() const {
  LucasParams out;
  out.triples.reserve(pairs.size());
  for (const auto& p : pairs) out.triples.push_back({p.v + p.y, p.v, p.y});
  return out;
}

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::identity: return "M";
    case Phase::right_cross: return "M*R";
    case Phase::left_cross: return "R*M";
    case Phase::both_cross: return "R*M*R";
    case Phase::transpose: return "M^T";
    case Phase::transpose_right: return "M^T*R";
    case Phase::left_transpose: return "R*M^T";
    case Phase::left_transpose_right: return "R*M^T*R";
  }
  return "?";
}

Phase compose(Phase first, Phase second) {
  const PhaseBits p = bits(first), q = bits(second);
  // Transposing R^l X R^r gives R^r X^T R^l, so a transpose in `second`
  // swaps the roles of the cross factors already applied by `first`.
  const bool l = q.left != (q.transpose ? p.right : p.left);
  const bool r = q.right != (q.transpose ? p.left : p.right);
  return from_bits(p.transpose != q.transpose, l, r);
}

SquareMatrix lucas3(const ExactInt& c, const ExactInt& v, const ExactInt& y) {
  return SquareMatrix(3, {c + v, c - v - y, c + y,
                          c - v + y, c, c + v - y,
                          c - y, c + v + y, c - v});
}

SquareMatrix frierson3(const ExactInt& v, const ExactInt& y) {
  if (v < 0 || y < 0) throw Error(Errc::invalid_argument, "Frierson parameters must be nonnegative");
  return lucas3(v + y, v, y);
}

std::size_t order_of_level(std::size_t level) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < level; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / 3)
      throw Error(Errc::resource_limit, "level too large");
    n *= 3;
  }
  return n;
}

std::size_t level_of_order(std::size_t order) {
  if (order < 3) return 0;
  std::size_t level = 0;
  while (order > 1) {
    if (order % 3 != 0) return 0;
    order /= 3;
    ++level;
  }
  return level;
}

SquareMatrix compound_once(const SquareMatrix& inner, const ExactInt& outer_c,
                           const ExactInt& outer_v, const ExactInt& outer_y) {
  if (level_of_order(inner.order()) == 0) {
    throw Error(Errc::invalid_argument,
                "compound_once: inner order " + std::to_string(inner.order()) +
                    " is not a power of 3");
  }
  return kronecker(all_ones(3), inner) +
         kronecker(lucas3(outer_c, outer_v, outer_y), all_ones(inner.order()));
}

SquareMatrix lucas(const LucasParams& params) {
  if (params.triples.empty()) throw Error(Errc::invalid_argument, "Lucas parameters are empty");
  const auto& first = params.triples.front();
  SquareMatrix m = lucas3(first.c, first.v, first.y);
  for (std::size_t i = 1; i < params.triples.size(); ++i) {
    const auto& t = params.triples[i];
    m = compound_once(m, t.c, t.v, t.y);
  }
  return m;
}

SquareMatrix frierson(const FriersonParams& params) {
  if (params.pairs.empty()) throw Error(Errc::invalid_argument, "Frierson parameters are empty");
  for (const auto& p : params.pairs)
    if (p.v < 0 || p.y < 0) throw Error(Errc::invalid_argument, "Frierson parameters must be nonnegative");
  return lucas(params.to_lucas());
}

SquareMatrix apply_phase(const SquareMatrix& m, Phase p) {
  const PhaseBits b = bits(p);
  const std::size_t n = m.order();
  std::vector<ExactInt> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(image_element(m, b, i, j));
  return SquareMatrix(n, std::move(e));
}

LucasParams apply_phase(const LucasParams& params, Phase p) {
  const PhaseBits b = bits(p);
  LucasParams out = params;
  for (auto& t : out.triples) {
    if (b.transpose) t.y = -t.y;
    if (b.left) {  // R X R
      t.v = -t.v;
      t.y = -t.y;
    }
    if (b.left != b.right) std::swap(t.v, t.y);  // trailing X R
  }
  return out;
}

std::array<SquareMatrix, 8> phase_images(const SquareMatrix& m) {
  return {apply_phase(m, kAllPhases[0]), apply_phase(m, kAllPhases[1]),
          apply_phase(m, kAllPhases[2]), apply_phase(m, kAllPhases[3]),
          apply_phase(m, kAllPhases[4]), apply_phase(m, kAllPhases[5]),
          apply_phase(m, kAllPhases[6]), apply_phase(m, kAllPhases[7])};
}

Phase canonical_phase_of(const SquareMatrix& m) {
  const std::size_t n = m.order();
  Phase best = Phase::identity;
  for (std::size_t k = 1; k < kAllPhases.size(); ++k) {
    const PhaseBits cb = bits(kAllPhases[k]);
    const PhaseBits cur = bits(best);
    bool smaller = false;
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      const std::size_t i = idx / n, j = idx % n;
      const ExactInt& a = image_element(m, cb, i, j);
      const ExactInt& b = image_element(m, cur, i, j);
      if (a != b) {
        smaller = a < b;
        break;
      }
    }
    if (smaller) best = kAllPhases[k];
  }
  return best;
}

SquareMatrix canonical_phase(const SquareMatrix& m) { return apply_phase(m, canonical_phase_of(m)); }

}  // namespace lucas
