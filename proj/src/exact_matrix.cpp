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

#include "lucas/exact_matrix.hpp"

#include <string>
#include <utility>

namespace lucas {
namespace {

void require_same_order(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(Errc::order_mismatch, std::string(op) + ": order " + std::to_string(a) +
                                          " vs " + std::to_string(b));
  }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t order, std::vector<ExactInt> elements)
    : order_(order), elements_(std::move(elements)) {
  if (order_ == 0) throw Error(Errc::invalid_argument, "matrix order must be positive");
  if (elements_.size() != order_ * order_) {
    throw Error(Errc::invalid_argument, "element count " + std::to_string(elements_.size()) +
                                            " does not match order " + std::to_string(order_));
  }
}

SquareMatrix SquareMatrix::zeros(std::size_t order) {
  return SquareMatrix(order, std::vector<ExactInt>(order * order));
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  std::vector<ExactInt> e(order * order);
  for (std::size_t i = 0; i < order; ++i) e[i * order + i] = 1;
  return SquareMatrix(order, std::move(e));
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<ExactInt>>& rows) {
  const std::size_t n = rows.size();
  std::vector<ExactInt> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(Errc::invalid_argument, "row of length " + std::to_string(r.size()) +
                                              " in a matrix with " + std::to_string(n) + " rows");
    }
    e.insert(e.end(), r.begin(), r.end());
  }
  return SquareMatrix(n, std::move(e));
}

bool SquareMatrix::is_zero() const {
  for (const auto& x : elements_)
    if (x != 0) return false;
  return true;
}

RationalMatrix::RationalMatrix(std::size_t order, std::vector<Rational> elements)
    : order_(order), elements_(std::move(elements)) {
  if (order_ == 0) throw Error(Errc::invalid_argument, "matrix order must be positive");
  if (elements_.size() != order_ * order_)
    throw Error(Errc::invalid_argument, "element count does not match order");
}

RationalMatrix RationalMatrix::from(const SquareMatrix& m) {
  std::vector<Rational> e(m.elements().begin(), m.elements().end());
  return RationalMatrix(m.order(), std::move(e));
}

bool RationalMatrix::is_identity() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

SquareMatrix all_ones(std::size_t n) {
  return SquareMatrix(n, std::vector<ExactInt>(n * n, ExactInt(1)));
}

SquareMatrix cross_identity(std::size_t n) {
  std::vector<ExactInt> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + (n - 1 - i)] = 1;
  return SquareMatrix(n, std::move(e));
}

SquareMatrix kronecker(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<ExactInt> e(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const ExactInt& s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        ExactInt* out = &e[(i * nb + k) * n + j * nb];
        if (s == 1) {
          for (std::size_t l = 0; l < nb; ++l) out[l] = b(k, l);
        } else {
          for (std::size_t l = 0; l < nb; ++l) out[l] = s * b(k, l);
        }
      }
    }
  }
  return SquareMatrix(n, std::move(e));
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a.order(), b.order(), "matmul");
  const std::size_t n = a.order();
  std::vector<ExactInt> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExactInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b(k, j);
    }
  }
  return SquareMatrix(n, std::move(e));
}

SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a.order(), b.order(), "add");
  std::vector<ExactInt> e(a.elements().begin(), a.elements().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.elements()[i];
  return SquareMatrix(a.order(), std::move(e));
}

SquareMatrix subtract(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a.order(), b.order(), "subtract");
  std::vector<ExactInt> e(a.elements().begin(), a.elements().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.elements()[i];
  return SquareMatrix(a.order(), std::move(e));
}

SquareMatrix scalar_mul(const ExactInt& k, const SquareMatrix& m) {
  std::vector<ExactInt> e(m.elements().begin(), m.elements().end());
  for (auto& x : e) x *= k;
  return SquareMatrix(m.order(), std::move(e));
}

SquareMatrix transpose(const SquareMatrix& m) {
  const std::size_t n = m.order();
  std::vector<ExactInt> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = m(i, j);
  return SquareMatrix(n, std::move(e));
}

ExactInt trace(const SquareMatrix& m) {
  ExactInt t = 0;
  for (std::size_t i = 0; i < m.order(); ++i) t += m(i, i);
  return t;
}

SquareMatrix power(const SquareMatrix& m, unsigned k) {
  SquareMatrix result = SquareMatrix::identity(m.order());
  SquareMatrix base = m;
  while (k > 0) {
    if (k & 1u) result = matmul(result, base);
    k >>= 1u;
    if (k > 0) base = matmul(base, base);
  }
  return result;
}

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a.order(), b.order(), "commutator");
  return subtract(matmul(a, b), matmul(b, a));
}

ExactInt frobenius_sq(const SquareMatrix& m) {
  ExactInt s = 0;
  for (const auto& x : m.elements()) s += x * x;
  return s;
}

std::size_t exact_rank(const SquareMatrix& m) {
  const std::size_t n = m.order();
  std::vector<ExactInt> a(m.elements().begin(), m.elements().end());
  auto at = [&](std::size_t i, std::size_t j) -> ExactInt& { return a[i * n + j]; };

  // Bareiss: after step k every entry of the trailing block is a k-th order
  // minor, so the division by the previous pivot is exact.
  ExactInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(rank, j));
    const ExactInt p = at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const ExactInt f = at(i, col);
      for (std::size_t j = col + 1; j < n; ++j) at(i, j) = (p * at(i, j) - f * at(rank, j)) / prev;
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_order(a.order(), b.order(), "matmul");
  const std::size_t n = a.order();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += a(i, k) * b(k, j);
  return RationalMatrix(n, std::move(e));
}

}  // namespace lucas
