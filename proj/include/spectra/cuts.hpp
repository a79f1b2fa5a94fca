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

#include "spectra/ab_words.hpp"
#include "spectra/biseq.hpp"
#include "spectra/language.hpp"
#include "spectra/surd.hpp"

namespace spectra {

// A bar inside the finite word left * right.
struct Cut {
  Word left;
  Word right;

  Cut(Word l, Word r);
  Word context() const { return left + right; }
  // Index of the digit just left of the bar; the other position is bar() + 1.
  std::size_t bar() const { return left.size() - 1; }

  // "2211|2211"; letters a, b expand to 22, 11.
  static Cut parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const Cut&) const = default;
};

enum class CutKind { Good, Bad, Mixed, Unresolved };
std::string to_string(CutKind k);

struct CutBudget {
  int max_depth = 48;           // digits added around the context
  std::size_t node_limit = 200'000;
};

// Extremes of lambda over all two-sided extensions of the context, at the
// digit left of the bar (index 0) and right of it (index 1).
struct CutClass {
  CutKind kind = CutKind::Unresolved;
  int depth = 0;  // extension depth at which the verdict was reached
  std::size_t nodes = 0;
  SurdSum min[2];
  SurdSum max[2];
};

// Good: every extension keeps lambda < 3 at both positions (decided by the
// exact maxima). Bad: every extension has lambda > 3 at one of them, proved
// by extension search. Mixed: neither, with a witness extension found.
CutClass classify_cut(const Cut& c, const CutBudget& budget = {});

enum class PushKind { GoodSymmetric, GoodAsymmetric, BadSymmetric, BadAsymmetric };
std::string to_string(PushKind k);
PushKind parse_push_kind(std::string_view text);

// The {a,b} pieces of a cut matched against a push template.
struct CutTemplate {
  ABWord X, w, Y;
};

// Splits c as   X b w* b | a w a Y   (BadAsymmetric),   a w* a | b w b   (BadSymmetric),
//               X b w* a | b w a Y  (GoodAsymmetric),  a w* b | a w b   (GoodSymmetric).
// The symmetric forms accept extra context, which push_cut ignores.
// Throws TemplateMismatch.
CutTemplate match_template(const Cut& c, PushKind kind);

// Image of a template cut under W with u = W(a), v = W(b):
//   BadAsymmetric   b u+ W(w*) v- b | a u+ W(w) v- a
//   BadSymmetric    a u+ W(w*) v- a | b u+ W(w) v- b
//   GoodAsymmetric  b u+ W(w*) v- a | b u+ W(w) v- a
//   GoodSymmetric   a u+ W(w*) v- b | a u+ W(w) v- b
// The asymmetric forms need |W(X)| >= |u| and |W(Y)| >= |v|. The empty W
// returns c. Throws TemplateMismatch.
Cut push_cut(const UVWord& W, const Cut& c, PushKind kind);

// Cuts of W(X R Y) touching W(R) are good whenever the cuts of X R Y touching
// R are. Returns whether the image satisfies the conclusion; throws
// PreconditionUnverified when the hypotheses fail.
struct ControlReport {
  bool hypothesis = false;
  bool conclusion = false;
  std::size_t image_cuts = 0;
};
ControlReport check_control(const ABWord& X, const ABWord& R, const ABWord& Y, const UVWord& W);

// Comparison of a bad cut x w* b | a w y with its extension by w~ = w X~.
struct BadCutComparison {
  bool verdict = false;        // sup of lambda over the extended family < t
  SurdSum extended_sup;        // sup over ... x w~* b | a w~ y ... at the first 2 after the bar
  SurdSum base_lambda;         // lambda of the witness at the same position
  SurdSum witness_value;       // Markov value of the witness, <= t
  BiSeq witness = BiSeq::periodic(Word("2"));
  long witness_position = 0;   // first digit of the a after the bar
};

// The base cut must be certified to occur in Sigma(t): through `witness`
// when given, otherwise by membership. Throws PreconditionUnverified.
BadCutComparison compare_bad_cuts(const Word& omega, int x, int y, const Word& omega_ext, const QuadSurd& t,
                                  const std::optional<BiSeq>& witness = std::nullopt,
                                  const MembershipBudget& budget = {});

}  // namespace spectra
