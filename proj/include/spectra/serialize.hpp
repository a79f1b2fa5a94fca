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

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spectra/ab_words.hpp"
#include "spectra/cuts.hpp"
#include "spectra/dimension.hpp"
#include "spectra/exact_cf.hpp"
#include "spectra/language.hpp"
#include "spectra/patterns.hpp"
#include "spectra/renorm.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

// Digits in every decimal shadow.
inline constexpr int kShadowDigits = 30;

// {"exact": "√221/5", "decimal": "2.97...", "precision": "30 digits"}.
Json exact_json(const QuadSurd& x, int digits = kShadowDigits);
Json exact_json(const SurdSum& x, int digits = kShadowDigits);
Json exact_json(const Rational& x, int digits = kShadowDigits);

Json to_json(const OrderedAlphabet& a);
Json to_json(const WeakRenormalization& r);
Json to_json(const Cylinder& c);
Json to_json(const MarkovValue& v);
Json to_json(const MembershipCertificate& c);
Json to_json(const LanguageSet& s);
Json to_json(const CutClass& c);
Json to_json(const PatternReport& r);
Json to_json(const ControlReport& r);
Json to_json(const BadCutComparison& c);
// "elapsed" (seconds) is written only when given.
Json to_json(const DimBracket& b, std::optional<double> elapsed = std::nullopt);
Json to_json(const DUpper& d, std::optional<double> elapsed = std::nullopt);
Json to_json(const BlockCertificate& c);

// Quotes a field when it holds a comma, quote, CR or LF; quotes are doubled.
std::string csv_field(const std::string& s);
// word,verdict,witness-period,refutation-depth
void write_csv(std::ostream& out, const LanguageSet& s);

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view text);

// Generic rendering of a result document. CSV expects {"rows": [flat objects]}
// and falls back to key,value lines for other documents.
void render(std::ostream& out, const Json& doc, Format f);

}  // namespace spectra
