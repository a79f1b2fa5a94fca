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

#include "spectra/serialize.hpp"

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::string precision_tag(int digits) { return std::to_string(digits) + " digits"; }

Json shadow(std::string exact, std::string decimal, int digits) {
  return Json{{"exact", std::move(exact)}, {"decimal", std::move(decimal)}, {"precision", precision_tag(digits)}};
}

// Period literal for periodic witnesses, the full literal otherwise.
std::string witness_period(const BiSeq& s) {
  if (s.left_period() == s.right_period() && s.left_transient().empty() && s.right_transient().empty())
    return s.right_period().str();
  return s.to_string();
}

}  // namespace

Json exact_json(const QuadSurd& x, int digits) { return shadow(x.to_string(), decimal_string(x, digits), digits); }

Json exact_json(const SurdSum& x, int digits) {
  if (auto q = x.as_quad_surd()) return exact_json(*q, digits);
  return shadow(x.to_string(), decimal_string(x, digits), digits);
}

Json exact_json(const Rational& x, int digits) { return shadow(to_string(x), decimal_string(x, digits), digits); }

Json to_json(const OrderedAlphabet& a) {
  return Json{{"alpha", a.alpha.str()}, {"beta", a.beta.str()}, {"witness", a.witness.str()}, {"depth", a.depth()}};
}

Json to_json(const WeakRenormalization& r) {
  return Json{{"w1", r.w1.str()},
              {"kernel_factorization", r.factorization},
              {"alphabet", to_json(r.alphabet)},
              {"w2", r.w2.str()}};
}

Json to_json(const Cylinder& c) {
  return Json{{"word", c.word.str()},
              {"lo", exact_json(c.lo)},
              {"hi", exact_json(c.hi)},
              {"length", exact_json(c.length)},
              {"r", r_exponent(c.word)}};
}

Json to_json(const MarkovValue& v) {
  Json j{{"value", exact_json(v.value)}, {"attained", v.attained}};
  j["witness_index"] = v.witness_index ? Json(*v.witness_index) : Json(nullptr);
  return j;
}

Json to_json(const MembershipCertificate& c) {
  Json j{{"word", c.word.str()}, {"threshold", exact_json(c.threshold)}, {"verdict", to_string(c.verdict)}};
  if (c.witness) j["witness"] = c.witness->to_string();
  if (c.witness_value) j["witness_value"] = exact_json(*c.witness_value);
  if (c.verdict == Verdict::Out) j["refutation_depth"] = c.refutation_depth;
  j["nodes"] = c.nodes;
  return j;
}

Json to_json(const LanguageSet& s) {
  Json rows = Json::array();
  for (const auto& [w, c] : s.entries) {
    Json r{{"word", w.str()}, {"verdict", to_string(c.verdict)}};
    r["witness_period"] = c.witness ? witness_period(*c.witness) : "";
    r["refutation_depth"] = c.verdict == Verdict::Out ? Json(c.refutation_depth) : Json(nullptr);
    rows.push_back(std::move(r));
  }
  return Json{{"n", s.n},
              {"t", exact_json(s.t)},
              {"count", {{"In", s.count(Verdict::In)},
                         {"Out", s.count(Verdict::Out)},
                         {"Unresolved", s.count(Verdict::Unresolved)}}},
              {"rows", std::move(rows)}};
}

Json to_json(const CutClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"depth", c.depth}, {"nodes", c.nodes}};
  for (int i = 0; i < 2; ++i) {
    const char* side = i == 0 ? "left" : "right";
    j[side] = Json{{"min", exact_json(c.min[i])}, {"max", exact_json(c.max[i])}};
  }
  return j;
}

Json to_json(const PatternReport& r) {
  Json rows = Json::array();
  for (const auto& h : r.hits) {
    Json row{{"pattern", h.pattern}, {"position", h.position}, {"factor", h.factor.str()}, {"applicable", h.applicable}};
    row["verified"] = h.verified ? Json(to_string(*h.verified)) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return Json{{"clean", r.clean()}, {"rows", std::move(rows)}};
}

Json to_json(const ControlReport& r) {
  return Json{{"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}, {"image_cuts", r.image_cuts}};
}

Json to_json(const BadCutComparison& c) {
  return Json{{"verdict", c.verdict},
              {"extended_sup", exact_json(c.extended_sup)},
              {"base_lambda", exact_json(c.base_lambda)},
              {"witness", c.witness.to_string()},
              {"witness_value", exact_json(c.witness_value)},
              {"witness_position", c.witness_position}};
}

Json to_json(const DimBracket& b, std::optional<double> elapsed) {
  Json j{{"lower", b.lower}, {"upper", b.upper}, {"level", b.level}, {"count", b.word_count}, {"mode", to_string(b.mode)}};
  if (elapsed) j["elapsed"] = *elapsed;
  return j;
}

Json to_json(const DUpper& d, std::optional<double> elapsed) {
  Json j{{"value", d.value}, {"capped", d.capped}, {"unresolved", d.unresolved}, {"bracket", to_json(d.bracket)}};
  if (elapsed) j["elapsed"] = *elapsed;
  return j;
}

Json to_json(const BlockCertificate& c) {
  return Json{{"ok", c.ok}, {"sup", exact_json(c.sup)}, {"window", c.window}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& out, const LanguageSet& s) { render(out, to_json(s), Format::Csv); }

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw ParseError("unknown format: " + std::string(text));
}

namespace {

// Scalars as plain text; exact values collapse to "exact ~ decimal (precision)".
std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_object() && v.contains("exact") && v.contains("decimal"))
    return v["exact"].get<std::string>() + " ~ " + v["decimal"].get<std::string>() + " (" +
           v["precision"].get<std::string>() + ")";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_structured() || (v.is_object() && v.contains("exact")); }

void text_lines(std::ostream& out, const Json& doc, const std::string& indent) {
  for (const auto& [k, v] : doc.items()) {
    if (is_scalar(v)) {
      out << indent << k << ": " << scalar_text(v) << "\n";
    } else if (v.is_array()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        if (is_scalar(e)) {
          out << indent << "  " << scalar_text(e) << "\n";
          continue;
        }
        std::string line;
        for (const auto& [ek, ev] : e.items()) {
          if (!line.empty()) line += "  ";
          line += ek + "=" + (is_scalar(ev) ? scalar_text(ev) : ev.dump());
        }
        out << indent << "  " << line << "\n";
      }
    } else {
      out << indent << k << ":\n";
      text_lines(out, v, indent + "  ");
    }
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_object() && v.contains("decimal")) return csv_field(v["exact"].get<std::string>());
  return csv_field(is_scalar(v) ? scalar_text(v) : v.dump());
}

}  // namespace

void render(std::ostream& out, const Json& doc, Format f) {
  if (f == Format::Json) {
    out << doc.dump(2) << "\n";
    return;
  }
  if (f == Format::Text) {
    text_lines(out, doc, "");
    return;
  }
  if (doc.contains("rows") && doc["rows"].is_array()) {
    const Json& rows = doc["rows"];
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(keys[i]);
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "," : "") << (r.contains(keys[i]) ? csv_cell(r[keys[i]]) : "");
      out << "\n";
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [k, v] : doc.flatten().items()) out << csv_field(k) << "," << csv_field(scalar_text(v)) << "\n";
}

}  // namespace spectra
