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

#include <cmath>

#include "doctest.h"
#include "lucas/radical.hpp"
#include "lucas/spectra.hpp"
#include "support.hpp"

using namespace lucas;

TEST_CASE("squarefree_part") {
  ExactInt root;
  CHECK(squarefree_part(12, &root) == 3);
  CHECK(root == 2);
  CHECK(squarefree_part(-50, &root) == -2);
  CHECK(root == 5);
  CHECK(squarefree_part(0) == 0);
  const ExactInt big = ExactInt(1) << 80;
  CHECK(squarefree_part(big * 3, &root) == 3);
  CHECK(root == ExactInt(1) << 40);
}

TEST_CASE("normalize") {
  auto r = Radical::normalize(1, 12);
  CHECK(r.coeff() == 2);
  CHECK(r.radicand() == 3);
  r = Radical::normalize(1, 3 * (9 - 1));
  CHECK(r == Radical::normalize(2, 6));
  r = Radical::normalize(5, 0);
  CHECK(r.coeff() == 0);
  CHECK(r.radicand() == 0);
  CHECK(Radical::normalize(0, 7) == Radical());
  CHECK(Radical::normalize(3, 4) == Radical(6));
  // Sign of the radicand survives.
  CHECK(Radical::normalize(1, -12) == Radical::normalize(2, -3));
  CHECK_FALSE(Radical::normalize(1, -3).is_real());
}

TEST_CASE("normalize is idempotent") {
  for (int i = 0; i < 200; ++i) {
    const auto a = test::random_int(-1000, 1000), d = test::random_int(-100000, 100000);
    const auto r = Radical::normalize(Rational(a, 7), d);
    CHECK(Radical::normalize(r.coeff(), r.radicand()) == r);
  }
}

TEST_CASE("sign, modulus and scaling") {
  const auto r = Radical::normalize(-1, 6);
  CHECK(r.abs() == Radical::normalize(1, 6));
  CHECK((-r) == Radical::normalize(1, 6));
  CHECK(lambda_value(3, 1).mul_by_int(3) == Radical::normalize(6, 6));
  CHECK(Radical::normalize(-2, -5).abs() == Radical::normalize(2, -5));
  CHECK(Radical::normalize(-2, -5).modulus() == Radical::normalize(2, 5));
  CHECK(Radical::normalize(2, 6).square() == 24);
  CHECK(Radical::normalize(2, -6).square() == -24);
  CHECK(Radical::normalize(3, 2).mul_by_rational(Rational(1, 3)) == Radical::normalize(1, 2));
}

TEST_CASE("compare_magnitude") {
  CHECK(compare_magnitude(Radical::normalize(12, 3), Radical::normalize(6, 3)) == std::strong_ordering::greater);
  CHECK(compare_magnitude(Radical::normalize(2, 6), Radical::normalize(-2, 6)) == std::strong_ordering::equal);
  CHECK(compare_magnitude(Radical::normalize(5, 1), Radical::normalize(2, 6)) == std::strong_ordering::greater);
  CHECK(compare_magnitude(Radical(), Radical::normalize(1, 2)) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare_magnitude(Radical::normalize(1, -3), Radical(1)), Error);
}

TEST_CASE("floating conversion") {
  CHECK(Radical::normalize(2, 6).to_double() == doctest::Approx(4.898979485566356).epsilon(1e-15));
  CHECK(Radical().to_double() == 0.0);
  const auto z = Radical::normalize(1, -3).to_complex();
  CHECK(z.real() == 0.0);
  CHECK(z.imag() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
  CHECK_THROWS_AS(Radical::normalize(1, -3).to_double(), Error);
}

TEST_CASE("floating conversion tracks the exact value") {
  for (int i = 0; i < 500; ++i) {
    const long a = static_cast<long>(test::random_int(-1000000, 1000000));
    const long d = static_cast<long>(test::random_int(0, 1000000));
    const auto r = Radical::normalize(a, d);
    const double expect = static_cast<double>(a) * std::sqrt(static_cast<double>(d));
    CHECK(std::abs(r.to_double() - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    const auto again = Radical::normalize(r.coeff(), r.radicand());
    CHECK(std::abs(again.to_double() - r.to_double()) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("display") {
  CHECK(Radical::normalize(2, 6).to_string() == "2*sqrt(6)");
  CHECK(Radical::normalize(-2, -6).to_string() == "-i*2*sqrt(6)");
  CHECK(Radical::normalize(1, -1).to_string() == "i*1");
  CHECK(Radical(12).to_string() == "12");
  CHECK(Radical::normalize(Rational(1, 2), 3).to_string() == "1/2*sqrt(3)");
  CHECK(Radical().to_string() == "0");
}

TEST_CASE("surd sums") {
  const SurdSum a = Radical::normalize(1, 2), b = Radical::normalize(1, 3);
  const SurdSum ab = a * b;
  CHECK(ab == SurdSum(Radical::normalize(1, 6)));
  CHECK(a * a == SurdSum(Rational(2)));
  CHECK((a + b - a) == b);
  CHECK((a - a).is_zero());
  const SurdSum i = Radical::normalize(1, -1);
  CHECK(i * i == SurdSum(Rational(-1)));
  const SurdSum s6 = Radical::normalize(1, 6), s10 = Radical::normalize(1, 10);
  CHECK(s6 * s10 == SurdSum(Radical::normalize(2, 15)));
  const auto z = (a + b).to_complex();
  CHECK(z.real() == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));
}
