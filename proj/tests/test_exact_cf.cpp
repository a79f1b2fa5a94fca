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

#include "spectra/biseq.hpp"
#include "spectra/bounds.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"

using namespace spectra;

namespace {

// [0; w] by backward recursion over rationals.
Rational cf_oracle(const std::string& digits, Rational tail = 0) {
  Rational x = tail;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    x = 1 / (Rational(*it - '0') + x);
    x.canonicalize();
  }
  return x;
}

// Periodic tail by long double iteration.
double periodic_oracle(const std::string& pre, const std::string& period) {
  std::string s = pre;
  while (s.size() < 400) s += period;
  long double x = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) x = 1.0L / ((*it - '0') + x);
  return static_cast<double>(x);
}

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? '2' : '1';
  return Word(s);
}

}  // namespace

TEST_CASE("finite continued fractions") {
  CHECK(eval_cf(Word("2")) == Rational(1, 2));
  CHECK(eval_cf(Word("12")) == Rational(2, 3));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Word w = random_word(rng, 1 + rng() % 20);
    CHECK(eval_cf(w) == cf_oracle(w.str()));
  }
}

TEST_CASE("cylinders") {
  // I(1): [0;1,y] for y in [0,1] spans [1/2, 1].
  Cylinder c = cylinder(Word("1"));
  CHECK(c.lo == Rational(1, 2));
  CHECK(c.hi == Rational(1));
  CHECK(cylinder(Word("2")).length == Rational(1, 6));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 1 + rng() % 24);
    Cylinder z = cylinder(w);
    Rational a = cf_oracle(w.str(), 0), b = cf_oracle(w.str(), 1);
    CHECK(z.lo == std::min(a, b));
    CHECK(z.hi == std::max(a, b));
    Continuants k = continuants(w);
    CHECK(z.length == Rational(Integer(1), Integer(k.q * (k.q + k.q_prev))));
    Word v = random_word(rng, 1 + rng() % 12);
    Rational joint = cylinder(w + v).length, prod = z.length * cylinder(v).length;
    CHECK(joint * 2 > prod);
    CHECK(joint < prod * 2);
  }
}

TEST_CASE("closed form for 2^n is shifted by one") {
  // ((3+2sqrt2)^n - (3-2sqrt2)^n)/(4 sqrt2) equals 1/|I(2^(n-1))|, not 1/|I(2^n)|.
  for (int n = 2; n <= 12; ++n) {
    double closed = (std::pow(3 + 2 * std::sqrt(2.0), n) - std::pow(3 - 2 * std::sqrt(2.0), n)) / (4 * std::sqrt(2.0));
    double inv = 1 / cylinder(Word(std::string(n - 1, '2'))).length.get_d();
    CHECK(closed == doctest::Approx(inv).epsilon(1e-9));
  }
}

TEST_CASE("r exponent bounds") {
  const double gold = std::log((3 + std::sqrt(5.0)) / 2), silver = std::log(3 + 2 * std::sqrt(2.0));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 1 + rng() % 40);
    long r = r_exponent(w);
    double n = static_cast<double>(w.size());
    CHECK(r >= std::floor((n - 3) * gold));
    CHECK(r <= (n + 1) * silver);
    CHECK(r == static_cast<long>(std::floor(-std::log(cylinder(w).length.get_d()))));
  }
}

TEST_CASE("periodic values") {
  CHECK(periodic_cf_value(Word(""), Word("1")) == (QuadSurd::sqrt(5) - QuadSurd(1)) / QuadSurd(2));
  CHECK(periodic_cf_value(Word(""), Word("2")) == QuadSurd::sqrt(2) - QuadSurd(1));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    Word pre = random_word(rng, rng() % 6), per = random_word(rng, 1 + rng() % 6);
    CHECK(periodic_cf_value(pre, per).to_double() == doctest::Approx(periodic_oracle(pre.str(), per.str())).epsilon(1e-12));
  }
}

TEST_CASE("extremal tails") {
  CHECK(extremal_tail(Word(""), Extremum::Max).value == QuadSurd::sqrt(3) - QuadSurd(1));
  CHECK(extremal_tail(Word(""), Extremum::Min).value == (QuadSurd::sqrt(3) - QuadSurd(1)) / QuadSurd(2));
  CHECK(extremal_tail(Word("2"), Extremum::Max).value ==
        (QuadSurd(2) + extremal_tail(Word(""), Extremum::Min).value).reciprocal());
  CHECK(free_tail_max() == QuadSurd::sqrt(3) - QuadSurd(1));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    Word pre = random_word(rng, rng() % 8);
    QuadSurd hi = extremal_tail(pre, Extremum::Max).value, lo = extremal_tail(pre, Extremum::Min).value;
    for (int j = 0; j < 5; ++j) {
      Rational v = cf_oracle((pre + random_word(rng, 200)).str());
      CHECK(QuadSurd(v) <= hi);
      CHECK(QuadSurd(v) >= lo);
    }
  }
}

TEST_CASE("extension bounds agree with extremal tails") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    Word x = random_word(rng, 2 + rng() % 10);
    ExtensionBounds eb(x.str());
    for (std::size_t p = 0; p < x.size(); ++p) {
      QuadSurd hi = QuadSurd(x.value(p)) + extremal_tail(x.substr(p + 1), Extremum::Max).value;
      QuadSurd hb = extremal_tail(x.substr(0, p).reversed(), Extremum::Max).value;
      CHECK(SurdSum(eb.value(p, Bound::Max)) == SurdSum(hi) + SurdSum(hb));
    }
  }
}

TEST_CASE("Markov values") {
  CHECK(markov_value(BiSeq::periodic(Word("1"))).value == SurdSum(QuadSurd::sqrt(5)));
  MarkovValue v = markov_value(BiSeq::parse("per(2211)"));
  CHECK(v.value == SurdSum(QuadSurd::sqrt(221) / QuadSurd(5)));
  CHECK(v.attained);
  // per(1) on the left, per(2) on the right: attained at the first 2.
  MarkovValue j = markov_value(BiSeq::parse("l:per(1) r:per(2)"));
  SurdSum expect = SurdSum(QuadSurd(1) + QuadSurd::sqrt(2)) + SurdSum((QuadSurd::sqrt(5) - QuadSurd(1)) / QuadSurd(2));
  CHECK(j.value == expect);
  CHECK(j.witness_index.value() == 0);
}

TEST_CASE("shift and transpose invariance") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    BiSeq s(random_word(rng, 1 + rng() % 4), random_word(rng, rng() % 4), random_word(rng, rng() % 4),
            random_word(rng, 1 + rng() % 4));
    long k = static_cast<long>(rng() % 11) - 5, p = static_cast<long>(rng() % 11) - 5;
    CHECK(lambda_at(s.shift(k), p) == lambda_at(s, p + k));
    CHECK(s.transpose().digit(p) == s.digit(-1 - p));
    SurdSum m = markov_value(s).value;
    CHECK(markov_value(s.shift(k)).value == m);
    CHECK(markov_value(s.transpose()).value == m);
  }
}

TEST_CASE("sequence literals") {
  BiSeq s = BiSeq::parse("l:per(1) mid(22|11) r:per(2)");
  CHECK(s.digit(-1) == 2);
  CHECK(s.digit(0) == 1);
  CHECK(s.digit(2) == 2);
  CHECK(s.digit(-3) == 1);
  CHECK(BiSeq::parse("per(ab)") == BiSeq::periodic(Word("2211")));
  CHECK(BiSeq::parse(s.to_string()) == s);
  CHECK_THROWS_AS(BiSeq::parse("per(3)"), ParseError);
}
