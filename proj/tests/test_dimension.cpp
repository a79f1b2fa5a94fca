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

#include "spectra/dimension.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"
#include "spectra/threshold.hpp"

using namespace spectra;

namespace {

std::vector<Word> all_words(int m) {
  std::vector<Word> out;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    std::string s;
    for (int i = 0; i < m; ++i) s += (bits >> i) & 1 ? '2' : '1';
    out.push_back(Word(s));
  }
  return out;
}

// Root of sum |I(w)|^s = 1 by plain double bisection; lies inside both brackets.
double plain_root(const std::vector<Word>& words) {
  std::vector<double> len;
  for (const auto& w : words) len.push_back(cylinder(w).length.get_d());
  double lo = 0, hi = 1;
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2, s = 0;
    for (double l : len) s += std::pow(l, mid);
    (s > 1 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("degenerate block") {
  for (BracketMode m : {BracketMode::ChainRule, BracketMode::QuasiMultiplicative}) {
    DimBracket b = moran_bracket({Word("2")}, m);
    CHECK(b.lower == 0);
    CHECK(b.upper == 0);
  }
  CHECK_THROWS_AS(moran_bracket({}), EmptyLanguage);
  CHECK_THROWS_AS(moran_bracket({Word("1"), Word("22")}), DomainError);
}

TEST_CASE("{1,2} brackets nest and converge") {
  DimBracket prev{0, 1};
  for (int m : {4, 8, 12}) {
    std::vector<Word> words = all_words(m);
    DimBracket b = moran_bracket(words);
    CHECK(b.lower <= 0.5313);
    CHECK(b.upper >= 0.5313);
    CHECK(b.lower >= prev.lower);
    CHECK(b.upper <= prev.upper);
    double r = plain_root(words);
    CHECK(b.lower <= r + 1e-9);
    CHECK(b.upper >= r - 1e-9);
    DimBracket q = moran_bracket(words, BracketMode::QuasiMultiplicative);
    CHECK(q.lower <= 0.5313);
    CHECK(q.upper >= 0.5313);
    prev = b;
  }
  CHECK(prev.upper - prev.lower <= 0.02);
}

TEST_CASE("d upper bounds") {
  DUpper cap = d_upper(QuadSurd::sqrt(12), 8);
  CHECK(cap.value == 1);
  CHECK(cap.capped);
  double prev = 1;
  for (int n = 2; n <= 4; ++n) {
    DUpper d = d_upper(QuadSurd(scaled_threshold(n)), 10);
    CHECK(d.value > 0);
    CHECK(d.value <= prev);
    prev = d.value;
  }
  CHECK_THROWS_AS(d_upper(QuadSurd(3), 6), DomainError);
}

TEST_CASE("block certificates") {
  BlockCertificate ab = certify_blocks({Word("2211")}, QuadSurd(3));
  CHECK(ab.ok);
  CHECK(ab.sup == SurdSum(QuadSurd::sqrt(221) / QuadSurd(5)));
  CHECK(!certify_blocks({Word("1122"), Word("2211")}, QuadSurd(3)).ok);
  CHECK(certify_blocks({Word("2")}, QuadSurd::sqrt(8)).ok);
  // 2.828427124 lies within 1e-9 below sqrt8.
  CHECK(!certify_blocks({Word("2")}, QuadSurd(Rational(2828427124, 1000000000))).ok);
  CHECK(certify_blocks({Word("1"), Word("2")}, QuadSurd::sqrt(12)).ok);
  // The certified sup dominates lambda on random block sequences.
  std::mt19937_64 rng(4);
  std::vector<Word> blocks{Word("2211"), Word("2222"), Word("1111")};
  BlockCertificate c = certify_blocks(blocks, QuadSurd(4));
  for (int i = 0; i < 20; ++i) {
    std::string p;
    for (int k = 0; k < 5; ++k) p += blocks[rng() % 3].str();
    CHECK(markov_value(BiSeq::periodic(Word(p))).value <= c.sup);
  }
}

TEST_CASE("Lambert inverse") {
  CHECK(lambert_inv(0) == 0);
  CHECK(lambert_inv(std::exp(1.0)) == doctest::Approx(1).epsilon(1e-14));
  CHECK(lambert_inv(-std::exp(-1.0)) == doctest::Approx(-1).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_inv(-0.5), DomainError);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(0, 1e6);
  for (int i = 0; i < 100; ++i) {
    double y = d(rng), w = lambert_inv(y);
    CHECK(std::abs(w * std::exp(w) - y) <= 1e-12 * y);
  }
}

TEST_CASE("asymptotic formulas") {
  CHECK(asym_c0() == doctest::Approx(0.0383005).epsilon(1e-6));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0.5, 300);
  for (int i = 0; i < 50; ++i) {
    double L = d(rng), rho = std::exp(-L);
    CHECK(d_asymptotic(rho) * L / 2 == doctest::Approx(lambert_inv(std::exp(asym_c0()) * L)).epsilon(1e-12));
  }
  double prev = 1;
  for (int n = 2; n <= 40; ++n) {
    double v = d_asymptotic_log(3 * n * std::log(6.0));
    CHECK(v < prev);
    prev = v;
  }
  double base = thm2_bound(std::exp(-100.0), 0);
  CHECK(base == doctest::Approx((std::log(100.0) - std::log(std::log(100.0))) / 100).epsilon(1e-14));
  CHECK(thm2_bound(std::exp(-100.0), 2.5) - base == doctest::Approx(0.025).epsilon(1e-12));
  CHECK_THROWS_AS(thm2_bound(0.5, 0), DomainError);
  CHECK_THROWS_AS(d_asymptotic(1.5), DomainError);
}
