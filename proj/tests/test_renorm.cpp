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

#include "spectra/error.hpp"
#include "spectra/renorm.hpp"

using namespace spectra;

namespace {

OrderedAlphabet ab() { return {ABWord("a"), ABWord("b"), UVWord()}; }

}  // namespace

TEST_CASE("single steps") {
  WeakRenormalization r = renorm_step(trivial_decomposition(ABWord("ababb")));
  CHECK(r.alphabet.alpha == ABWord("ab"));
  CHECK(r.alphabet.beta == ABWord("b"));
  CHECK(r.reassemble() == ABWord("ababb"));
  CHECK(r.factorization.substr(0, 2) == "AA");

  WeakRenormalization s = renorm_step(trivial_decomposition(ABWord("babab")));
  CHECK(s.alphabet.alpha == ABWord("ab"));
  CHECK(s.w1 == ABWord("b"));
  CHECK(s.factorization == "AA");
  CHECK(s.w2.empty());

  WeakRenormalization p = renorm_step(trivial_decomposition(ABWord("aaaa")));
  CHECK(p.alphabet.alpha == ABWord("a"));
  CHECK(p.alphabet.beta == ABWord("ab"));
  // Kernel ending with alpha over (u,uv) needs |v| <= |w2|, so one a moves to w2.
  CHECK(p.kernel() == ABWord("aaa"));
  CHECK(p.w1.empty());
  CHECK(p.w2 == ABWord("a"));

  CHECK_THROWS_AS(renorm_step(trivial_decomposition(ABWord("aabb"))), NotRenormalizable);
}

TEST_CASE("stable side across a step") {
  std::mt19937_64 rng(3);
  int steps = 0;
  for (const auto& a : enumerate_alphabets(5)) {
    for (int t = 0; t < 4; ++t) {
      std::string f;
      for (int i = 0; i < 6; ++i) f += rng() % 3 ? 'A' : 'B';
      WeakRenormalization r{ABWord(), f, a, ABWord()};
      WeakRenormalization next;
      try {
        next = renorm_step(r);
      } catch (const NotRenormalizable&) {
        continue;
      }
      ++steps;
      CHECK(next.reassemble() == r.reassemble());
      CHECK(next.alphabet.product().size() > r.alphabet.product().size());
      // Kernel starting with u keeps w1; kernel ending with v keeps w2.
      if (f.front() == 'A') CHECK(next.w1 == r.w1);
      if (f.back() == 'B') CHECK(next.w2 == r.w2);
    }
  }
  CHECK(steps > 20);
}

TEST_CASE("ab extensions") {
  CHECK(ab_extension(Word("2211")).word == Word("2211"));
  Extension e = ab_extension(Word("21111"));
  CHECK(e.left);
  CHECK(e.word == Word("221111"));
  Extension both = ab_extension(Word("2112"));
  CHECK(both.left);
  CHECK(both.right);
  CHECK(both.word == Word("221122"));
}

TEST_CASE("find_alphabet") {
  for (int n = 3; n <= 8; ++n) {
    std::string s;
    while (static_cast<int>(s.size()) < 3 * n) s += "2211";
    AlphabetResult r = find_alphabet(Word(s.substr(0, 3 * n)), n);
    const auto& a = r.decomposition.alphabet;
    CHECK(static_cast<int>(to_digits(a.product()).size()) >= n);
    CHECK(to_digits(r.decomposition.reassemble()) == r.extension.word);
    CHECK_NOTHROW(check_invariants(r.decomposition));
  }
  AlphabetResult ones = find_alphabet(Word(std::string(12, '1')), 4);
  CHECK(ones.decomposition.alphabet.alpha == ABWord("a"));
  CHECK(ones.decomposition.kernel().count('a') == 0);
  CHECK_THROWS_AS(find_alphabet(Word("2222111122221111"), 6), NotRenormalizable);
}

TEST_CASE("semi renormalization") {
  for (const auto& a : enumerate_alphabets(4)) {
    if (a.depth() == 0) continue;
    WeakRenormalization r = semi_renormalize(to_digits(a.product()), a);
    CHECK(r.w1.empty());
    CHECK(r.w2.empty());
    CHECK(r.kernel() == a.product());
    // Junk on both sides is recovered as the trailing words.
    ABWord w1 = a.product().substr(a.product().size() - 1), w2 = a.product().substr(0, 1);
    WeakRenormalization j = semi_renormalize(to_digits(w1 + a.product() + a.alpha + w2), a);
    CHECK(j.reassemble() == w1 + a.product() + a.alpha + w2);
    CHECK(j.alphabet == a);
  }
  // 2 1...1 of even length decomposes after the extension to 22 1...1.
  WeakRenormalization e = semi_renormalize(Word("2111111"), alphabet_from_pair(ABWord("ab"), ABWord("b")));
  CHECK(e.reassemble() == ABWord("abbb"));
  CHECK(trivial_decomposition(ABWord("ab")).alphabet == ab());
}
