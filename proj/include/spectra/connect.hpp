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

namespace spectra {

enum class ConnectKind { AB, BA, AToAlphaBeta, AlphaBetaToB };
std::string to_string(ConnectKind k);
ConnectKind parse_connect_kind(std::string_view text);

// Sequences joining periodic orbits through the Farey words alpha_0 < ... < alpha_N of F_m:
//   AB            per(a)^-  alpha_0 ... alpha_N  per(b)^+          (m = n)
//   BA            transpose of AB
//   AToAlphaBeta  per(a)^-  alpha_0 ... alpha_i  per(alpha beta)^+  with alpha_i = alpha (alpha beta)^n
//   AlphaBetaToB  per(alpha beta)^-  alpha_i ... alpha_N  per(b)^+  with alpha_i = (alpha beta)^n beta
// For the last two, m is the letter length of alpha_i. Position 0 is the
// first digit of the Farey block.
BiSeq connecting_sequence(ConnectKind kind, int n, const std::optional<OrderedAlphabet>& alphabet = std::nullopt);

}  // namespace spectra
