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

namespace spectra {

// Grammar:
//   t := decimal | p "/" q | "sqrt(" k ")" | c ("+"|"-") b "^-" e
//   e := integer | integer "n"          (the "n" form scales by `n`)
// Examples: "3", "3.06", "sqrt(12)", "3+6^-3n", "3+6^-18".
QuadSurd parse_threshold(std::string_view text, std::optional<long> n = std::nullopt);

// |log rho| for a small positive rho.
// Grammar: rho := b "^-" e | "e^-" x | decimal, with e as for thresholds
// and x a decimal. Examples: "6^-18", "6^-3n", "e^-100", "0.001".
double parse_log_rho(std::string_view text, std::optional<long> n = std::nullopt);

// 3 + 6^(-3n).
Rational scaled_threshold(long n);

}  // namespace spectra
