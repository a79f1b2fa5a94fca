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

#include <string>

#include "spectra/ab_words.hpp"

namespace spectra {

// w = w1 * kernel * w2 with the kernel written over (alpha, beta).
struct WeakRenormalization {
  ABWord w1;
  std::string factorization;  // 'A' for alpha, 'B' for beta
  OrderedAlphabet alphabet;
  ABWord w2;

  ABWord kernel() const;
  ABWord reassemble() const { return w1 + kernel() + w2; }
};

// Kernel = whole word over (a, b), empty trailing words.
WeakRenormalization trivial_decomposition(const ABWord& w);

// Throws NotRenormalizable naming the first violated condition.
void check_invariants(const WeakRenormalization& r);

enum class StepKind { Auto, ToUV_V, ToU_UV };

// One step of the chain to (uv, v) or (u, uv). Auto prefers (uv, v) when both apply.
WeakRenormalization renorm_step(const WeakRenormalization& r, StepKind kind = StepKind::Auto);

// Digit extension of at most one digit per side that is an {a,b}-word.
// Tried in the order: none, right, left, both.
struct Extension {
  Word word;
  bool left = false;
  bool right = false;
};
Extension ab_extension(const Word& w);

struct AlphabetResult {
  Extension extension;
  WeakRenormalization decomposition;
};

// Runs the chain from the trivial decomposition until |alpha beta| >= n
// (digit lengths). Throws NotRenormalizable or NoValidExtension.
AlphabetResult find_alphabet(const Word& w, int n);

// Decomposition over a given alphabet by following its witness path.
WeakRenormalization semi_renormalize(const Word& w, const OrderedAlphabet& alphabet);

}  // namespace spectra
