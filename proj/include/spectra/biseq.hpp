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
#include <string_view>

#include "spectra/surd.hpp"
#include "spectra/symbols.hpp"

namespace spectra {

// Digits with letters a, b expanded to 22, 11; whitespace is skipped.
// Throws ParseError on other symbols.
std::string expand_letters(std::string_view text);

// Two-sided eventually periodic sequence
//   ... (left_period)^inf left_transient | right_transient (right_period)^inf ...
// Position 0 is the first digit right of the bar.
class BiSeq {
 public:
  BiSeq(Word left_period, Word left_transient, Word right_transient, Word right_period);
  static BiSeq periodic(const Word& period);

  const Word& left_period() const { return lp_; }
  const Word& left_transient() const { return lt_; }
  const Word& right_transient() const { return rt_; }
  const Word& right_period() const { return rp_; }

  int digit(long i) const;
  // Digits at positions [from, from + len).
  Word window(long from, std::size_t len) const;

  // shift(k).digit(i) == digit(i + k).
  BiSeq shift(long k) const;
  // transpose().digit(i) == digit(-1 - i).
  BiSeq transpose() const;

  bool operator==(const BiSeq&) const = default;

  // Literal grammar:
  //   seq  := "per(" P ")" | "l:per(" P ")" [ "mid(" M ")" ] "r:per(" Q ")"
  //   M    := digits | digits "|" digits
  // Without a bar inside mid, position 0 is the first digit of M.
  // Letters a, b are accepted and expanded to 22, 11.
  static BiSeq parse(std::string_view literal);
  std::string to_string() const;

 private:
  Word lp_, lt_, rt_, rp_;
};

// Digits from position i rightwards: finite prefix then a repeated period.
struct OneSided {
  Word prefix;
  Word period;
};
OneSided forward_from(const BiSeq& s, long i);
// Digits s(i), s(i-1), ... as a one-sided sequence.
OneSided backward_from(const BiSeq& s, long i);

// [s_i; s_{i+1}, ...] + [0; s_{i-1}, s_{i-2}, ...].
SurdSum lambda_at(const BiSeq& s, long i);

struct MarkovBudget {
  int max_doublings = 14;
};

struct MarkovValue {
  SurdSum value;
  bool attained = false;
  std::optional<long> witness_index;  // set when attained
};

// sup_i lambda_at(s, i), certified exactly; throws BudgetExceeded.
MarkovValue markov_value(const BiSeq& s, const MarkovBudget& budget = {});

// Shortest primitive root of a period word.
Word primitive_root(const Word& w);

}  // namespace spectra
