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

#ifndef LUCAS_RADICAL_HPP
#define LUCAS_RADICAL_HPP

#include <compare>
#include <complex>
#include <map>
#include <string>

#include "lucas/exact_matrix.hpp"

namespace lucas {

/// Squarefree part of |n| with the sign of n; `root` receives r with
/// n = r^2 * result. Zero maps to zero.
ExactInt squarefree_part(const ExactInt& n, ExactInt* root = nullptr);

/// Exact value coeff * sqrt(radicand). A negative radicand denotes the
/// purely imaginary value coeff * i * sqrt(|radicand|). Always normalized:
/// radicand squarefree, and a zero value is stored as (0, 0).
class Radical {
 public:
  Radical() = default;
  explicit Radical(const ExactInt& integer) : Radical(normalize(Rational(integer), 1)) {}

  static Radical normalize(const Rational& coeff, const ExactInt& radicand);

  const Rational& coeff() const noexcept { return coeff_; }
  const ExactInt& radicand() const noexcept { return radicand_; }

  bool is_zero() const noexcept { return radicand_ == 0; }
  bool is_real() const noexcept { return radicand_ >= 0; }
  bool is_rational() const noexcept { return radicand_ == 0 || radicand_ == 1; }

  Radical operator-() const;
  /// Flips the sign of the coefficient only; imaginary values stay imaginary.
  Radical abs() const;
  /// |value| as a real radical, also for imaginary values.
  Radical modulus() const;
  Radical mul_by_int(const ExactInt& k) const;
  Radical mul_by_rational(const Rational& k) const;
  /// value^2 as a rational (negative for imaginary values).
  Rational square() const;

  /// Real values only; throws Errc::precondition otherwise.
  double to_double() const;
  std::complex<double> to_complex() const;

  /// "a*sqrt(d)", "i*a*sqrt(d)" for imaginary values, plain "a" when
  /// rational.
  std::string to_string() const;

  friend bool operator==(const Radical&, const Radical&) = default;

 private:
  Radical(Rational c, ExactInt d) : coeff_(std::move(c)), radicand_(std::move(d)) {}

  Rational coeff_{0};
  ExactInt radicand_{0};
};

/// Orders real radicals by absolute value. Throws Errc::precondition on
/// imaginary input.
std::strong_ordering compare_magnitude(const Radical& a, const Radical& b);

/// Finite sum of rational multiples of distinct square roots, closed under
/// ring operations. Used for eigenvector and singular-vector entries, which
/// pick up products of several radicands under Kronecker products.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& r);  // NOLINT: implicit from rationals
  SurdSum(const Radical& r);   // NOLINT

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<ExactInt, Rational>& terms() const noexcept { return terms_; }

  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  SurdSum operator-() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const SurdSum&, const SurdSum&) = default;

 private:
  void add_term(const ExactInt& radicand, const Rational& coeff);

  // radicand (squarefree, nonzero) -> nonzero coefficient
  std::map<ExactInt, Rational> terms_;
};

/// Decimal string of a rational: "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace lucas

#endif  // LUCAS_RADICAL_HPP
