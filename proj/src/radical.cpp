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

#include "lucas/radical.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/integer/common_factor_rt.hpp>

namespace lucas {
namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

// Trial division; radicands in this library are small, and anything that
// fits in 64 bits is handled natively.
ExactInt squarefree_magnitude(const ExactInt& magnitude, ExactInt* root) {
  if (magnitude <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t m = magnitude.convert_to<std::uint64_t>();
    std::uint64_t core = 1;
    ExactInt r = 1;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (unsigned k = 0; k < e / 2; ++k) r *= p;
      if (e % 2) core *= p;
    }
    if (root) *root = r;
    return ExactInt(core) * m;
  }
  ExactInt m = magnitude, core = 1, r = 1;
  for (ExactInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) r *= p;
    if (e % 2) core *= p;
  }
  if (root) *root = r;
  return core * m;
}

std::string coeff_string(const Rational& c) { return to_string(c); }

}  // namespace

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

ExactInt squarefree_part(const ExactInt& n, ExactInt* root) {
  if (n == 0) {
    if (root) *root = 0;
    return 0;
  }
  ExactInt core = squarefree_magnitude(n < 0 ? ExactInt(-n) : n, root);
  return n < 0 ? ExactInt(-core) : core;
}

Radical Radical::normalize(const Rational& coeff, const ExactInt& radicand) {
  if (coeff == 0 || radicand == 0) return Radical();
  ExactInt root;
  ExactInt core = squarefree_part(radicand, &root);
  return Radical(coeff * root, core);
}

Radical Radical::operator-() const { return Radical(-coeff_, radicand_); }

Radical Radical::abs() const { return coeff_ < 0 ? -*this : *this; }

Radical Radical::modulus() const {
  Rational c = coeff_ < 0 ? Rational(-coeff_) : coeff_;
  return Radical(c, radicand_ < 0 ? ExactInt(-radicand_) : radicand_);
}

Radical Radical::mul_by_int(const ExactInt& k) const { return mul_by_rational(Rational(k)); }

Radical Radical::mul_by_rational(const Rational& k) const {
  if (k == 0 || is_zero()) return Radical();
  return Radical(coeff_ * k, radicand_);
}

Rational Radical::square() const { return coeff_ * coeff_ * radicand_; }

double Radical::to_double() const {
  if (!is_real()) throw Error(Errc::precondition, "imaginary radical has no real value");
  return to_complex().real();
}

std::complex<double> Radical::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double mag = lucas::to_double(coeff_) *
                     std::sqrt(radicand_ < 0 ? (-radicand_).convert_to<double>()
                                             : radicand_.convert_to<double>());
  return radicand_ < 0 ? std::complex<double>(0.0, mag) : std::complex<double>(mag, 0.0);
}

std::string Radical::to_string() const {
  if (is_zero()) return "0";
  std::string sign = coeff_ < 0 ? "-" : "";
  Rational c = coeff_ < 0 ? Rational(-coeff_) : coeff_;
  std::string s = sign;
  if (radicand_ < 0) s += "i*";
  s += coeff_string(c);
  const ExactInt d = radicand_ < 0 ? ExactInt(-radicand_) : radicand_;
  if (d != 1) s += "*sqrt(" + d.str() + ")";
  return s;
}

std::strong_ordering compare_magnitude(const Radical& a, const Radical& b) {
  if (!a.is_real() || !b.is_real())
    throw Error(Errc::precondition, "compare_magnitude needs real radicals");
  const Rational sa = a.square(), sb = b.square();
  if (sa < sb) return std::strong_ordering::less;
  if (sa > sb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

SurdSum::SurdSum(const Rational& r) {
  if (r != 0) terms_.emplace(ExactInt(1), r);
}

SurdSum::SurdSum(const Radical& r) {
  if (!r.is_zero()) terms_.emplace(r.radicand(), r.coeff());
}

void SurdSum::add_term(const ExactInt& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

SurdSum SurdSum::operator-() const {
  SurdSum r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      // Both radicands are squarefree, so with g = gcd the cofactors are
      // coprime and their product is squarefree again.
      const ExactInt ma = da < 0 ? ExactInt(-da) : da;
      const ExactInt mb = db < 0 ? ExactInt(-db) : db;
      const ExactInt g = boost::integer::gcd(ma, mb);
      ExactInt radicand = (ma / g) * (mb / g);
      Rational coeff = ca * cb * g;
      const bool na = da < 0, nb = db < 0;
      if (na && nb) coeff = -coeff;  // i * i
      if (na != nb) radicand = -radicand;
      r.add_term(radicand, coeff);
    }
  }
  return r;
}

std::complex<double> SurdSum::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [d, c] : terms_) z += Radical::normalize(c, d).to_complex();
  return z;
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    std::string t = Radical::normalize(c, d).to_string();
    if (!first) {
      if (t.front() == '-') {
        s += " - " + t.substr(1);
        continue;
      }
      s += " + ";
    }
    s += t;
    first = false;
  }
  return s;
}

}  // namespace lucas
