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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "spectra/error.hpp"

namespace spectra {

// Finite string over a fixed two-letter alphabet described by Traits.
template <class Traits>
class SymbolString {
 public:
  SymbolString() = default;
  explicit SymbolString(std::string_view s) : s_(s) {
    for (char c : s_)
      if (c != Traits::first && c != Traits::second)
        throw ParseError(std::string("invalid symbol '") + c + "' in " + Traits::name);
  }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char operator[](std::size_t i) const { return s_[i]; }
  char front() const { return s_.front(); }
  char back() const { return s_.back(); }
  const std::string& str() const { return s_; }

  // Traits::first maps to 1, Traits::second to 2.
  int value(std::size_t i) const { return s_[i] == Traits::first ? 1 : 2; }

  SymbolString substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return raw(s_.substr(pos, len));
  }
  SymbolString reversed() const { return raw(std::string(s_.rbegin(), s_.rend())); }
  // w with the first (resp. last) symbol removed.
  SymbolString drop_first() const { return empty() ? *this : substr(1); }
  SymbolString drop_last() const { return empty() ? *this : substr(0, size() - 1); }
  SymbolString rotated(std::size_t k) const {
    if (empty()) return *this;
    k %= size();
    return raw(s_.substr(k) + s_.substr(0, k));
  }
  SymbolString power(std::size_t k) const {
    std::string out;
    out.reserve(s_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += s_;
    return raw(std::move(out));
  }

  bool starts_with(const SymbolString& o) const { return s_.starts_with(o.s_); }
  bool ends_with(const SymbolString& o) const { return s_.ends_with(o.s_); }
  bool contains(const SymbolString& o) const { return s_.find(o.s_) != std::string::npos; }
  std::size_t find(const SymbolString& o, std::size_t from = 0) const { return s_.find(o.s_, from); }
  std::size_t count(char c) const { return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), c)); }

  SymbolString& operator+=(const SymbolString& o) {
    s_ += o.s_;
    return *this;
  }
  SymbolString& push_back(char c) {
    s_.push_back(c);
    return *this;
  }
  friend SymbolString operator+(SymbolString a, const SymbolString& b) { return a += b; }

  auto operator<=>(const SymbolString&) const = default;
  bool operator==(const SymbolString&) const = default;

  // Bypasses validation; callers guarantee the alphabet.
  static SymbolString raw(std::string s) {
    SymbolString w;
    w.s_ = std::move(s);
    return w;
  }

 private:
  std::string s_;
};

struct DigitTraits {
  static constexpr char first = '1';
  static constexpr char second = '2';
  static constexpr const char* name = "digit word";
};
struct ABTraits {
  static constexpr char first = 'b';
  static constexpr char second = 'a';
  static constexpr const char* name = "ab word";
};
struct UVTraits {
  static constexpr char first = 'U';
  static constexpr char second = 'V';
  static constexpr const char* name = "UV word";
};

using Word = SymbolString<DigitTraits>;
using ABWord = SymbolString<ABTraits>;
using UVWord = SymbolString<UVTraits>;

template <class T>
T transpose(const T& w) {
  return w.reversed();
}

}  // namespace spectra

template <class Traits>
struct std::hash<spectra::SymbolString<Traits>> {
  std::size_t operator()(const spectra::SymbolString<Traits>& w) const noexcept {
    return std::hash<std::string>()(w.str());
  }
};
