/*
 * Copyright 2026 The spectra authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spectra/arith.hpp"
#include "spectra/error.hpp"
#include "spectra/surd.hpp"
#include "spectra/threshold.hpp"

using namespace spectra;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3.06") == Rational(-153, 50));
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(decimal_string(Rational(1, 3), 5) == "0.33333");
  CHECK(decimal_string(Rational(2, 3), 3) == "0.667");
  CHECK(rational_pow(Rational(6), -2) == Rational(1, 36));
}

TEST_CASE("surd canonical form and rendering") {
  CHECK(QuadSurd::sqrt(8).to_string() == "2√2");
  CHECK((QuadSurd::sqrt(221) / QuadSurd(5)).to_string() == "√221/5");
  CHECK(QuadSurd::sqrt(9) == QuadSurd(3));
  CHECK(QuadSurd::sqrt(12) == QuadSurd(2) * QuadSurd::sqrt(3));
  QuadSurd x = QuadSurd(1) + QuadSurd::sqrt(3);
  CHECK(x * x.conjugate() == QuadSurd(-2));
  CHECK(x.reciprocal() * x == QuadSurd(1));
  CHECK(std::abs(x.to_double() - (1 + std::sqrt(3.0))) < 1e-15);
  CHECK_THROWS_AS(QuadSurd::sqrt(2) + QuadSurd::sqrt(3), DomainError);
}

TEST_CASE("surd sums order exactly") {
  // Oracle: double evaluation away from near-ties.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    long a = static_cast<long>(rng() % 40) - 20, b = static_cast<long>(rng() % 40) - 20, c = static_cast<long>(rng() % 40) - 20;
    SurdSum x = SurdSum(QuadSurd(a)) + SurdSum(QuadSurd(b) * QuadSurd::sqrt(2));
    SurdSum y = SurdSum(QuadSurd(c) * QuadSurd::sqrt(3));
    double dx = a + b * std::sqrt(2.0), dy = c * std::sqrt(3.0);
    if (std::abs(dx - dy) < 1e-9) continue;
    CHECK((x < y) == (dx < dy));
    int n = (x < y) + (x == y) + (x > y);
    CHECK(n == 1);
  }
  // Three radicals: sqrt2 + sqrt3 - sqrt5 = 0.9...; a zero difference is exact.
  SurdSum s = SurdSum(QuadSurd::sqrt(2)) + SurdSum(QuadSurd::sqrt(3)) - SurdSum(QuadSurd::sqrt(5));
  CHECK(s.sign() > 0);
  CHECK((SurdSum(QuadSurd::sqrt(2)) - SurdSum(QuadSurd::sqrt(2))).sign() == 0);
}

TEST_CASE("decimal shadows") {
  CHECK(decimal_string(QuadSurd::sqrt(221) / QuadSurd(5), 7) == "2.9732137");
  CHECK(decimal_string(QuadSurd::sqrt(2), 10) == "1.4142135624");
}

TEST_CASE("threshold grammar") {
  CHECK(parse_threshold("3") == QuadSurd(3));
  CHECK(parse_threshold("3.06") == QuadSurd(Rational(153, 50)));
  CHECK(parse_threshold("sqrt(12)") == QuadSurd::sqrt(12));
  CHECK(parse_threshold("3+6^-18") == QuadSurd(scaled_threshold(6)));
  CHECK(parse_threshold("3+6^-3n", 2) == QuadSurd(Rational(3) + Rational(1, 46656)));
  CHECK(parse_threshold("3-2^-1") == QuadSurd(Rational(5, 2)));
  CHECK_THROWS_AS(parse_threshold("3+6^-3n"), ParseError);
  CHECK_THROWS_AS(parse_threshold("3+6^2"), ParseError);
  CHECK(std::abs(parse_log_rho("6^-18") - 18 * std::log(6.0)) < 1e-12);
  CHECK(std::abs(parse_log_rho("6^-3n", 4) - 12 * std::log(6.0)) < 1e-12);
  CHECK(parse_log_rho("e^-100") == doctest::Approx(100));
  CHECK(parse_log_rho("0.001") == doctest::Approx(std::log(1000.0)));
  CHECK_THROWS_AS(parse_log_rho("2"), DomainError);
}
