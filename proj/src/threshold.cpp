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

#include "spectra/threshold.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

long parse_long(const std::string& s) {
  if (s.empty()) throw ParseError("missing integer in threshold");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad integer in threshold: " + s);
  return std::stol(s);
}

long parse_exponent(const std::string& e, std::optional<long> n, const std::string& whole) {
  if (!e.empty() && e.back() == 'n') {
    if (!n) throw ParseError("expression uses n but no n was given: " + whole);
    std::string k = e.substr(0, e.size() - 1);
    return (k.empty() ? 1 : parse_long(k)) * *n;
  }
  return parse_long(e);
}

}  // namespace

Rational scaled_threshold(long n) { return Rational(3) + rational_pow(Rational(6), -3 * n); }

QuadSurd parse_threshold(std::string_view text, std::optional<long> n) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty threshold");
  if (s.starts_with("sqrt(") && s.back() == ')') {
    std::string k = s.substr(5, s.size() - 6);
    return QuadSurd::sqrt(Integer(parse_long(k)));
  }
  auto caret = s.find('^');
  if (caret == std::string::npos) return QuadSurd(parse_rational(s));
  // c (+|-) b ^- e
  std::size_t op = s.find_last_of("+-", caret);
  while (op != std::string::npos && op > 0 && s[op - 1] == '^') op = s.find_last_of("+-", op - 2);
  if (op == std::string::npos || op == 0) throw ParseError("threshold must look like c+b^-e: " + s);
  Rational c = parse_rational(s.substr(0, op));
  bool plus = s[op] == '+';
  Rational b = parse_rational(s.substr(op + 1, caret - op - 1));
  std::string e = s.substr(caret + 1);
  if (!e.starts_with("-")) throw ParseError("exponent must be negative: " + s);
  e = e.substr(1);
  long exponent = parse_exponent(e, n, s);
  Rational tail = rational_pow(b, -exponent);
  return QuadSurd(plus ? Rational(c + tail) : Rational(c - tail));
}

double parse_log_rho(std::string_view text, std::optional<long> n) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty rho");
  double L;
  auto caret = s.find("^-");
  if (caret == std::string::npos) {
    double rho = parse_rational(s).get_d();
    if (!(rho > 0 && rho < 1)) throw DomainError("rho must lie in (0, 1): " + s);
    L = -std::log(rho);
  } else if (s.substr(0, caret) == "e") {
    L = parse_rational(s.substr(caret + 2)).get_d();
  } else {
    double b = parse_rational(s.substr(0, caret)).get_d();
    if (!(b > 1)) throw DomainError("rho base must exceed 1: " + s);
    L = static_cast<double>(parse_exponent(s.substr(caret + 2), n, s)) * std::log(b);
  }
  if (!(L > 0)) throw DomainError("rho must lie in (0, 1): " + s);
  return L;
}

}  // namespace spectra
