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

#include <random>
#include <set>

#include "spectra/exact_cf.hpp"
#include "spectra/language.hpp"
#include "spectra/patterns.hpp"
#include "spectra/threshold.hpp"

using namespace spectra;

namespace {

std::set<std::string> in_set(const LanguageSet& s) {
  std::set<std::string> out;
  for (const auto& w : s.words(Verdict::In)) out.insert(w.str());
  return out;
}

// Length-n factors of the periodic words with the given periods.
std::set<std::string> factor_oracle(const std::vector<std::string>& periods, std::size_t n) {
  std::set<std::string> out;
  for (const auto& p : periods) {
    std::string s;
    while (s.size() < n + 2 * p.size()) s += p;
    for (std::size_t i = 0; i < p.size(); ++i) out.insert(s.substr(i, n));
  }
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(membership(Word("121"), QuadSurd(Rational(306, 100))).verdict == Verdict::Out);
  MembershipCertificate c = membership(Word("2211"), QuadSurd(3));
  REQUIRE(c.verdict == Verdict::In);
  CHECK(*c.witness_value <= SurdSum(3));
  CHECK(verify_certificate(c));
  Word w("22221111");
  MembershipCertificate d = membership(w, QuadSurd(Rational(3) + exp_neg_upper(r_exponent(w))));
  CHECK(d.verdict == Verdict::Out);
  CHECK(d.refutation_depth >= 0);
  CHECK(verify_certificate(d));
}

TEST_CASE("small languages") {
  CHECK(in_set(sigma_enumerate(QuadSurd(3), 1)) == std::set<std::string>{"1", "2"});
  std::set<std::string> six{"111", "112", "211", "122", "221", "222"};
  CHECK(in_set(sigma_enumerate(QuadSurd(3), 3)) == six);
  CHECK(in_set(sigma3_factors(3)) == six);
  CHECK(sigma_enumerate(QuadSurd::sqrt(12), 5).count(Verdict::In) == 32);
  std::set<std::string> f4 = in_set(sigma3_factors(4));
  CHECK(f4.count("2211"));
  CHECK(f4.count("1122"));
  CHECK(!f4.count("2121"));
}

TEST_CASE("factor oracle built from Farey periods") {
  // Periods up to 8 letters: the words of F_8 and their digit images.
  std::vector<std::string> periods;
  for (const auto& w : farey_words(8)) periods.push_back(to_digits(w).str());
  for (std::size_t n = 1; n <= 10; ++n) CHECK(in_set(sigma3_factors(static_cast<int>(n))) == factor_oracle(periods, n));
}

TEST_CASE("transposition and monotonicity") {
  QuadSurd t1(Rational(3) + Rational(1, 1000)), t2(Rational(301, 100));
  for (int n : {6, 9, 12}) {
    LanguageSet a = sigma_enumerate(t1, n), b = sigma_enumerate(t2, n);
    std::set<std::string> sa = in_set(a), sb = in_set(b);
    for (const auto& w : sa) {
      CHECK(sa.count(std::string(w.rbegin(), w.rend())));
      CHECK(sb.count(w));
    }
    LanguageSet shorter = sigma_enumerate(t1, n - 2);
    std::set<std::string> ss = in_set(shorter);
    for (const auto& w : sa)
      for (std::size_t i = 0; i + n - 2 <= w.size(); ++i) CHECK(ss.count(w.substr(i, n - 2)));
  }
}

TEST_CASE("certificates re-check") {
  LanguageSet s = sigma_enumerate(QuadSurd(Rational(3) + Rational(1, 100)), 8);
  CHECK(s.count(Verdict::Unresolved) == 0);
  for (const auto& [w, c] : s.entries) CHECK(verify_certificate(c));
}

TEST_CASE("periodic witness index") {
  PeriodicWitnessIndex idx(6, 24);
  auto hit = idx.find(Word("221122"), QuadSurd(3));
  REQUIRE(hit.has_value());
  CHECK(hit->value <= SurdSum(3));
  CHECK(!idx.find(Word("222111"), QuadSurd(3)));
}
