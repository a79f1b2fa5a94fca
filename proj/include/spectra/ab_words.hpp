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

#include <vector>

#include "spectra/arith.hpp"
#include "spectra/symbols.hpp"

namespace spectra {

// a -> 22, b -> 11.
Word to_digits(const ABWord& w);
// Inverse of to_digits; throws DomainError unless the digits split into 22/11 pairs.
ABWord from_digits(const Word& w);

// Letterwise U (a->ab, b->b) and V (a->a, b->ab).
ABWord apply_U(const ABWord& w);
ABWord apply_V(const ABWord& w);
// W = XY acts as X(Y(w)): the rightmost letter is applied first.
ABWord apply_subst(const UVWord& W, const ABWord& w);

struct OrderedAlphabet {
  ABWord alpha;
  ABWord beta;
  UVWord witness;

  std::size_t depth() const { return witness.size(); }
  ABWord product() const { return alpha + beta; }
  bool operator==(const OrderedAlphabet&) const = default;
};

// Pair operations U(u, v) = (uv, v) and V(u, v) = (u, uv).
OrderedAlphabet pair_U(const OrderedAlphabet& x);
OrderedAlphabet pair_V(const OrderedAlphabet& x);
// Alphabet generated by a witness: (W(a), W(b)).
OrderedAlphabet alphabet_from_witness(const UVWord& W);
// The alphabet (alpha, beta) with its witness, found by undoing pair
// operations; throws DomainError when (alpha, beta) is not in the tree.
OrderedAlphabet alphabet_from_pair(const ABWord& alpha, const ABWord& beta);

// Depth 0..n, breadth first; within a depth, witnesses in U < V order.
std::vector<OrderedAlphabet> enumerate_alphabets(int n);

Rational theta(const ABWord& k);
ABWord theta_inverse(const Rational& x);
Rational mediant(const Rational& x, const Rational& y);

// F_n as words in increasing theta order, endpoints a and b included.
std::vector<ABWord> farey_words(int n);

// Euler totient.
long totient(long n);

}  // namespace spectra
