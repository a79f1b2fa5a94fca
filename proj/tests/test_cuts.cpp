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

#include "spectra/connect.hpp"
#include "spectra/cuts.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"
#include "spectra/patterns.hpp"
#include "spectra/threshold.hpp"

using namespace spectra;

namespace {

// lambda at position p of a finite context, maximised over extensions by tails.
SurdSum max_by_tails(const Word& x, std::size_t p) {
  QuadSurd f = QuadSurd(x.value(p)) + extremal_tail(x.substr(p + 1), Extremum::Max).value;
  return SurdSum(f) + SurdSum(extremal_tail(x.substr(0, p).reversed(), Extremum::Max).value);
}

SurdSum min_by_tails(const Word& x, std::size_t p) {
  QuadSurd f = QuadSurd(x.value(p)) + extremal_tail(x.substr(p + 1), Extremum::Min).value;
  return SurdSum(f) + SurdSum(extremal_tail(x.substr(0, p).reversed(), Extremum::Min).value);
}

}  // namespace

TEST_CASE("cut parsing") {
  Cut c = Cut::parse("ab|ab");
  CHECK(c.left == Word("2211"));
  CHECK(c.bar() == 3);
  CHECK(c.to_string() == "2211|2211");
  CHECK_THROWS_AS(Cut::parse("2211"), ParseError);
  CHECK_THROWS_AS(Cut::parse("|22"), ParseError);
}

TEST_CASE("classification") {
  Cut good = Cut::parse("2211|2211");
  CutClass g = classify_cut(good);
  CHECK(g.kind == CutKind::Good);
  for (int i = 0; i < 2; ++i) CHECK(g.max[i] == max_by_tails(good.context(), good.bar() + i));
  CHECK(g.max[1].to_double() == doctest::Approx(2.975).epsilon(1e-3));

  Cut bad = Cut::parse("2222|1111");
  CutClass b = classify_cut(bad);
  CHECK(b.kind == CutKind::Bad);
  CHECK(b.min[0] == min_by_tails(bad.context(), bad.bar()));
  CHECK(classify_cut(Cut::parse("222|222")).kind == CutKind::Good);
  CHECK(classify_cut(Cut::parse("12|21")).kind == CutKind::Mixed);
}

TEST_CASE("context never flips a resolved class") {
  std::mt19937_64 rng(9);
  for (const char* s : {"2211|2211", "2222|1111", "22|22", "1122|2211"}) {
    Cut c = Cut::parse(s);
    CutKind k = classify_cut(c).kind;
    for (int i = 0; i < 6; ++i) {
      std::string l = std::string(1, rng() % 2 ? '1' : '2') + c.left.str();
      std::string r = c.right.str() + std::string(1, rng() % 2 ? '1' : '2');
      CutKind e = classify_cut(Cut(Word(l), Word(r))).kind;
      if (k == CutKind::Good) CHECK(e == CutKind::Good);
      if (k == CutKind::Bad) CHECK(e == CutKind::Bad);
    }
  }
}

TEST_CASE("push templates") {
  Cut c = Cut::parse("ab|ab");
  CHECK(push_cut(UVWord(), c, PushKind::GoodSymmetric) == c);
  Cut u = push_cut(UVWord("U"), c, PushKind::GoodSymmetric);
  CHECK(classify_cut(u).kind == CutKind::Good);
  Cut v = push_cut(UVWord("V"), Cut::parse("aa|bb"), PushKind::BadSymmetric);
  CHECK(classify_cut(v).kind == CutKind::Bad);
  CHECK_THROWS_AS(push_cut(UVWord("U"), Cut::parse("aa|bb"), PushKind::GoodSymmetric), TemplateMismatch);
  CutTemplate t = match_template(Cut::parse("abb|aab"), PushKind::BadAsymmetric);
  CHECK(t.X == ABWord("a"));
  CHECK(t.Y == ABWord("b"));
  CHECK(t.w.empty());
}

TEST_CASE("control") {
  ControlReport r = check_control(ABWord("ab"), ABWord("ab"), ABWord("ab"), UVWord("U"));
  CHECK(r.hypothesis);
  CHECK(r.image_cuts > 0);
  CHECK_THROWS_AS(check_control(ABWord("a"), ABWord("ab"), ABWord("b"), UVWord("UU")), PreconditionUnverified);
}

TEST_CASE("bad cut comparison") {
  // Base x a* b | a a y inside per(aab) style words; witness given explicitly.
  QuadSurd t(Rational(31, 10));
  BadCutComparison same = compare_bad_cuts(Word("22"), 1, 2, Word("22"), t);
  CHECK(same.witness_value <= SurdSum(t));
  CHECK(same.base_lambda <= same.extended_sup);
  BadCutComparison ext = compare_bad_cuts(Word("22"), 1, 2, Word("2211"), t);
  CHECK(ext.verdict == (ext.extended_sup < SurdSum(t)));
  CHECK_THROWS_AS(compare_bad_cuts(Word("22"), 1, 2, Word("11"), t), DomainError);
  CHECK_THROWS_AS(compare_bad_cuts(Word("22"), 1, 1, Word("22"), t), DomainError);
}

TEST_CASE("forbidden patterns") {
  OrderedAlphabet ab{ABWord("a"), ABWord("b"), UVWord()};
  PatternReport r = forbidden_pattern_check(Word("2222111122"), ab, 4, true);
  bool flagged = false;
  for (const auto& h : r.hits)
    if (h.pattern == "alpha2beta2") {
      flagged = true;
      CHECK(h.factor == Word("22221111"));
      CHECK(h.verified == Verdict::Out);
    }
  CHECK(flagged);
  CHECK(forbidden_pattern_check(Word("221122112211"), ab, 4).clean());
  PatternReport f = forbidden_pattern_check(to_digits(ABWord("aaaabab")), ab, 4);
  bool force = false;
  for (const auto& h : f.hits) force = force || h.pattern == "force";
  CHECK(force);
  auto bw = b_words(ABWord("a"), ABWord("b"));
  CHECK(bw[0] == ABWord("baabaaaa"));
  CHECK(bw[3] == ABWord("bababaabaa"));
  CHECK(exp_neg_upper(5).get_d() >= std::exp(-5.0));
  CHECK(exp_neg_upper(5).get_d() < std::exp(-5.0) * (1 + 1e-12));
}

TEST_CASE("connecting sequences") {
  BiSeq s = connecting_sequence(ConnectKind::AB, 3);
  CHECK(s.left_period() == Word("22"));
  CHECK(s.right_period() == Word("11"));
  CHECK(s.window(0, 20) == to_digits(ABWord("aaabababbb")));  // a.aab.ab.abb.b
  CHECK(s.window(-2, 24) == Word("22") + to_digits(ABWord("aaabababbb")) + Word("11"));
  CHECK(connecting_sequence(ConnectKind::BA, 3) == s.transpose());
  SurdSum prev = markov_value(s).value;
  CHECK(prev > SurdSum(3));
  for (int n = 4; n <= 7; ++n) {
    SurdSum v = markov_value(connecting_sequence(ConnectKind::AB, n)).value;
    CHECK(v > SurdSum(3));
    CHECK(v <= prev);
    prev = v;
  }
  OrderedAlphabet a{ABWord("ab"), ABWord("b"), UVWord("U")};
  CHECK(markov_value(connecting_sequence(ConnectKind::AToAlphaBeta, 2, a)).value > SurdSum(3));
  CHECK_THROWS(connecting_sequence(ConnectKind::AToAlphaBeta, 2));
}
