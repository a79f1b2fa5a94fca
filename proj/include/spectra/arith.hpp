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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spectra {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sgn(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

std::string to_string(const Integer& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts "p", "p/q" and finite decimals such as "-3.06".
Rational parse_rational(std::string_view text);

// Integer power of a rational; negative exponents allowed for nonzero bases.
Rational rational_pow(const Rational& base, long exponent);

// Round-to-nearest decimal rendering with `digits` fractional digits.
std::string decimal_string(const Rational& x, int digits);

}  // namespace spectra
