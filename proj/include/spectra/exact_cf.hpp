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

#include <array>

#include "spectra/arith.hpp"
#include "spectra/surd.hpp"
#include "spectra/symbols.hpp"

namespace spectra {

// [0; a1, ..., ak].
Rational eval_cf(const Word& w);

// 2x2 integer matrix [[a, b], [c, d]] acting as x -> (a x + b) / (c x + d).
struct Mobius {
  Integer a{1}, b{0}, c{0}, d{1};

  // Composition: (this * o)(x) = this(o(x)).
  Mobius operator*(const Mobius& o) const;
  Integer det() const { return a * d - b * c; }
  QuadSurd apply(const QuadSurd& x) const { return x.mobius(a, b, c, d); }
  Rational apply(const Rational& x) const;
};

// Map y -> [0; w, y] viewed with y as the value of the tail [0; ...],
// i.e. the composition of y -> 1 / (a_i + y).
Mobius digit_map(const Word& w);

// Continuants of w: q_k and q_{k-1} (denominators), p_k and p_{k-1}.
struct Continuants {
  Integer p, p_prev, q, q_prev;
};
Continuants continuants(const Word& w);

struct Cylinder {
  Word word;
  Rational lo, hi, length;
};

Cylinder cylinder(const Word& w);

// floor(ln(1 / |I(w)|)), decided exactly against directed-rounded powers of e.
long r_exponent(const Word& w);

// integer_part + [0; preperiod, period, period, ...].
QuadSurd periodic_cf_value(const Word& preperiod, const Word& period, long integer_part = 0);

enum class Extremum { Min, Max };

// Which tails are admissible after the prefix.
enum class TailConstraint {
  Free,            // every sequence over {1, 2}
  NoIsolatedDigit  // no 121 or 212 at or after the junction
};

// One-sided tail t = preperiod period period ... and the value [0; prefix, t].
struct ExtremalTail {
  Word preperiod;
  Word period;
  QuadSurd value;
};

// Exact sup (Max) or inf (Min) of [0; prefix, t] over admissible tails t.
ExtremalTail extremal_tail(const Word& prefix, Extremum direction,
                           TailConstraint constraint = TailConstraint::Free);

// [0; 1, 2, 1, 2, ...] = sqrt(3) - 1 and [0; 2, 1, 2, 1, ...] = (sqrt(3) - 1) / 2.
const QuadSurd& free_tail_max();
const QuadSurd& free_tail_min();

}  // namespace spectra
