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
#include <string_view>
#include <vector>

#include "spectra/language.hpp"
#include "spectra/surd.hpp"
#include "spectra/symbols.hpp"

namespace spectra {

// How one-step distortion is bounded for the limit set of free block sequences.
enum class BracketMode {
  // |g_w'| on the set of {1,2} tails: 1/(q + q' y)^2 with y in [(sqrt3-1)/2, sqrt3-1].
  ChainRule,
  // 1/2 |I(u)||I(w)| < |I(uw)| < 2 |I(u)||I(w)|.
  QuasiMultiplicative
};
std::string to_string(BracketMode m);
BracketMode parse_bracket_mode(std::string_view text);

// Hausdorff dimension bracket of { [0; w1 w2 w3 ...] : w_i in words }.
struct DimBracket {
  double lower = 0;
  double upper = 0;
  int level = 0;
  std::size_t word_count = 0;
  BracketMode mode = BracketMode::ChainRule;
};

// Certified roots of the pressure equations, isolated to 2^-30. The sums are
// evaluated with MPFR in the rounding direction that keeps each root one-sided.
// Throws EmptyLanguage, DomainError for mixed lengths.
DimBracket moran_bracket(const std::vector<Word>& words, BracketMode mode = BracketMode::ChainRule, int workers = 1);

struct DUpper {
  double value = 1;        // min(1, 2 * upper)
  DimBracket bracket;
  std::size_t unresolved = 0;  // included in the cover
  bool capped = false;
};

// Upper bound for d(t) from the cover by Sigma(t, m) cylinders. Requires 3 < t <= sqrt(12).
DUpper d_upper(const QuadSurd& t, int m, const MembershipBudget& budget = {}, int workers = 1,
               BracketMode mode = BracketMode::ChainRule);

// Exact sup of lambda over every bi-infinite free concatenation of the blocks
// (all of one length), compared with t.
struct BlockCertificate {
  bool ok = false;
  SurdSum sup;
  std::size_t window = 0;  // digits inspected around each position: one block
};
BlockCertificate certify_blocks(const std::vector<Word>& blocks, const QuadSurd& t);

// Inverse of H(x) = x e^x on [-1/e, inf), principal branch. Throws DomainError.
double lambert_inv(double y);

// c0 = -log log((3 + sqrt5) / 2).
double asym_c0();

// 2 H^-1(e^c0 L) / L with L = |log rho|; the _log forms take L directly.
double d_asymptotic(double rho);
double d_asymptotic_log(double L);

// (log L - log log L + C) / L with L = |log rho| > e.
double thm2_bound(double rho, double C);
double thm2_bound_log(double L, double C);

}  // namespace spectra
