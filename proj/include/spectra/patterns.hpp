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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/ab_words.hpp"
#include "spectra/language.hpp"

namespace spectra {

// One occurrence of a forbidden factor in a digit word.
struct PatternHit {
  std::string pattern;    // "alpha2beta2", "force", "force-dual", "w0" .. "w3"
  std::size_t position = 0;
  Word factor;
  bool applicable = false;  // the length side condition for n holds
  std::optional<Verdict> verified;  // membership of the factor at 3 + 6^(-3n)
};

struct PatternReport {
  std::vector<PatternHit> hits;
  bool clean() const { return hits.empty(); }
};

// Scans w for the factors excluded near 3 for the alphabet (u, v):
//   alpha2beta2   a word over {u, v} starting with u u and ending with v v
//   force         u^r1 v u^r2 v with r2 < r1 - 1
//   force-dual    u v^r1 u v^r2 u v with r2 < r1 - 1
//   w0 .. w3      b u+ u^2 v u^3 v- a,  b u+ u v u^2 v- a,
//                 b u+ u v u^2 v u^2 v- a,  b u+ u v u v u^2 v u v- a
// Side conditions: factor length <= 3n + 2 for the first three, |u^2 v| <= n
// for w0 .. w2 and |u v| <= n / 2 for w3 (digit lengths). With `verify`,
// applicable hits are checked by membership at 3 + 6^(-3n).
PatternReport forbidden_pattern_check(const Word& w, const OrderedAlphabet& alphabet, int n, bool verify = false,
                                      const MembershipBudget& budget = {});

// The four fixed words w0 .. w3 for (u, v), as {a,b} words.
std::vector<ABWord> b_words(const ABWord& u, const ABWord& v);

// A rational >= e^(-r), used as the threshold 3 + e^(-r) with r = r(w).
Rational exp_neg_upper(long r);

}  // namespace spectra
