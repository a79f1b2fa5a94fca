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

#include <numeric>
#include <random>

#include "spectra/ab_words.hpp"
#include "spectra/error.hpp"

using namespace spectra;

namespace {

ABWord random_ab(std::mt19937_64& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? 'a' : 'b';
  return ABWord(s);
}

}  // namespace

TEST_CASE("digit images") {
  CHECK(to_digits(ABWord("ab")) == Word("2211"));
  CHECK(from_digits(Word("112222")) == ABWord("baa"));
  CHECK_THROWS_AS(from_digits(Word("121")), DomainError);
  CHECK_THROWS_AS(from_digits(Word("1222")), DomainError);
  CHECK(transpose(ABWord("abb")) == ABWord("bba"));
}

TEST_CASE("substitutions") {
  CHECK(apply_U(ABWord("ab")) == ABWord("abb"));
  CHECK(apply_V(ABWord("ab")) == ABWord("aab"));
  CHECK(apply_subst(UVWord("UV"), ABWord("a")) == ABWord("ab"));
  CHECK(apply_subst(UVWord("UV"), ABWord("b")) == ABWord("abb"));
  // (UV(a), UV(b)) = V(U(a, b)) on pairs.
  OrderedAlphabet p = pair_V(pair_U({ABWord("a"), ABWord("b"), UVWord()}));
  CHECK(p == alphabet_from_witness(UVWord("UV")));
  CHECK(apply_subst(UVWord(), ABWord("ab")) == ABWord("ab"));
}

TEST_CASE("alphabet tree") {
  auto d0 = enumerate_alphabets(0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].alpha == ABWord("a"));
  auto d2 = enumerate_alphabets(2);
  CHECK(d2.size() == 7);
  CHECK(d2[1].alpha == ABWord("ab"));
  CHECK(d2[1].beta == ABWord("b"));
  CHECK(d2[2].alpha == ABWord("a"));
  CHECK(d2[2].beta == ABWord("ab"));
  bool found = false;
  for (const auto& a : d2) found = found || (a.alpha == ABWord("ab") && a.beta == ABWord("abb"));
  CHECK(found);
  for (const auto& a : enumerate_alphabets(8)) {
    CHECK(alphabet_from_witness(a.witness) == a);
    CHECK(alphabet_from_pair(a.alpha, a.beta) == a);
    CHECK(a.alpha.front() == 'a');
    CHECK(a.beta.back() == 'b');
    CHECK(theta(a.alpha) < theta(a.beta));
    CHECK(theta(a.product()) == mediant(theta(a.alpha), theta(a.beta)));
  }
  CHECK_THROWS_AS(alphabet_from_pair(ABWord("b"), ABWord("a")), DomainError);
}

TEST_CASE("word identities") {
  std::mt19937_64 rng(11);
  for (const auto& a : enumerate_alphabets(9)) {
    // u^j begins with v- a and v^j ends with b u+ once |u^j| >= |uv|.
    const ABWord& u = a.alpha;
    const ABWord& v = a.beta;
    std::size_t j = (u.size() + v.size() + u.size() - 1) / u.size();
    if (v.size() >= 1) CHECK(u.power(j).starts_with(v.drop_last() + ABWord("a")));
    std::size_t k = (u.size() + v.size() + v.size() - 1) / v.size();
    CHECK(v.power(k).ends_with(ABWord("b") + u.drop_first()));
  }
  for (int i = 0; i < 200; ++i) {
    ABWord w = random_ab(rng, rng() % 30);
    CHECK(transpose(transpose(w)) == w);
    CHECK(to_digits(transpose(w)) == transpose(to_digits(w)));
  }
}

TEST_CASE("theta and Farey words") {
  CHECK(theta(ABWord("a")) == 0);
  CHECK(theta(ABWord("b")) == 1);
  CHECK(theta(ABWord("aab")) == Rational(1, 3));
  CHECK(theta_inverse(Rational(0)) == ABWord("a"));
  CHECK(theta_inverse(Rational(1)) == ABWord("b"));
  CHECK(theta_inverse(Rational(1, 2)) == ABWord("ab"));
  CHECK(theta_inverse(Rational(2, 5)) == ABWord("aabab"));
  CHECK(mediant(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(farey_words(1) == std::vector<ABWord>{ABWord("a"), ABWord("b")});
  CHECK(farey_words(2) == std::vector<ABWord>{ABWord("a"), ABWord("ab"), ABWord("b")});
  CHECK(farey_words(3) ==
        std::vector<ABWord>{ABWord("a"), ABWord("aab"), ABWord("ab"), ABWord("abb"), ABWord("b")});
  for (int n = 1; n <= 30; ++n) {
    long expect = 1;
    for (int k = 1; k <= n; ++k) expect += totient(k);
    auto fw = farey_words(n);
    CHECK(static_cast<long>(fw.size()) == expect);
    for (std::size_t i = 0; i + 1 < fw.size(); ++i) {
      Rational x = theta(fw[i]), y = theta(fw[i + 1]);
      // ps - qr = -1 for consecutive p/q < r/s.
      CHECK(x.get_num() * y.get_den() - x.get_den() * y.get_num() == -1);
    }
  }
  CHECK_THROWS_AS(theta_inverse(Rational(3, 2)), DomainError);
}
