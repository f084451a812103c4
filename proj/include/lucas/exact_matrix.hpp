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

#ifndef LUCAS_EXACT_MATRIX_HPP
#define LUCAS_EXACT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lucas/error.hpp"

namespace lucas {

using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense, immutable n-by-n matrix of arbitrary-precision integers stored
/// row-major. Every operation below returns a new value.
class SquareMatrix {
 public:
  /// Throws Errc::invalid_argument unless `elements.size() == order * order`
  /// and `order >= 1`.
  SquareMatrix(std::size_t order, std::vector<ExactInt> elements);

  static SquareMatrix zeros(std::size_t order);
  static SquareMatrix identity(std::size_t order);
  /// Rows must all have the same length as the number of rows.
  static SquareMatrix from_rows(const std::vector<std::vector<ExactInt>>& rows);

  std::size_t order() const noexcept { return order_; }
  const ExactInt& operator()(std::size_t row, std::size_t col) const {
    return elements_[row * order_ + col];
  }
  std::span<const ExactInt> elements() const noexcept { return elements_; }
  std::span<const ExactInt> row(std::size_t r) const {
    return std::span<const ExactInt>(elements_).subspan(r * order_, order_);
  }

  bool is_zero() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<ExactInt> elements_;
};

/// Exact rationals in lowest terms; used for inverses.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t order, std::vector<Rational> elements);
  static RationalMatrix from(const SquareMatrix& m);

  std::size_t order() const noexcept { return order_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return elements_[row * order_ + col];
  }
  std::span<const Rational> elements() const noexcept { return elements_; }
  bool is_identity() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<Rational> elements_;
};

// E_n: every element 1.
SquareMatrix all_ones(std::size_t n);
// R_n: ones on the cross diagonal.
SquareMatrix cross_identity(std::size_t n);

/// Block (i, j) of the result is a(i, j) * b.
SquareMatrix kronecker(const SquareMatrix& a, const SquareMatrix& b);

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix subtract(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix scalar_mul(const ExactInt& k, const SquareMatrix& m);
SquareMatrix transpose(const SquareMatrix& m);
ExactInt trace(const SquareMatrix& m);
/// k-th power by repeated squaring; k = 0 gives the identity.
SquareMatrix power(const SquareMatrix& m, unsigned k);

/// AB - BA.
SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b);

/// Sum of squared elements.
ExactInt frobenius_sq(const SquareMatrix& m);

/// Rank over the rationals (fraction-free Bareiss elimination).
std::size_t exact_rank(const SquareMatrix& m);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) { return matmul(a, b); }
inline SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) { return add(a, b); }
inline SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) { return subtract(a, b); }
inline SquareMatrix operator*(const ExactInt& k, const SquareMatrix& m) { return scalar_mul(k, m); }

}  // namespace lucas

#endif  // LUCAS_EXACT_MATRIX_HPP
