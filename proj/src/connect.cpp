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

#include "spectra/connect.hpp"

#include <algorithm>

#include "spectra/error.hpp"

namespace spectra {

std::string to_string(ConnectKind k) {
  switch (k) {
    case ConnectKind::AB: return "ab";
    case ConnectKind::BA: return "ba";
    case ConnectKind::AToAlphaBeta: return "a-to-ab";
    default: return "ab-to-b";
  }
}

ConnectKind parse_connect_kind(std::string_view text) {
  if (text == "ab") return ConnectKind::AB;
  if (text == "ba") return ConnectKind::BA;
  if (text == "a-to-ab" || text == "a-to-alphabeta") return ConnectKind::AToAlphaBeta;
  if (text == "ab-to-b" || text == "alphabeta-to-b") return ConnectKind::AlphaBetaToB;
  throw ParseError("unknown connecting kind: " + std::string(text));
}

namespace {

Word concat(const std::vector<ABWord>& ws, std::size_t from, std::size_t to) {
  ABWord out;
  for (std::size_t i = from; i < to; ++i) out += ws[i];
  return to_digits(out);
}

std::size_t index_of(const std::vector<ABWord>& ws, const ABWord& target) {
  auto it = std::find(ws.begin(), ws.end(), target);
  if (it == ws.end()) throw DomainError("word " + target.str() + " is not a Farey word");
  return static_cast<std::size_t>(it - ws.begin());
}

}  // namespace

BiSeq connecting_sequence(ConnectKind kind, int n, const std::optional<OrderedAlphabet>& alphabet) {
  if (n < 1) throw DomainError("n must be positive");
  const Word a("22"), b("11");
  switch (kind) {
    case ConnectKind::AB: {
      auto fw = farey_words(n);
      return BiSeq(a, Word(), concat(fw, 0, fw.size()), b);
    }
    case ConnectKind::BA:
      return connecting_sequence(ConnectKind::AB, n).transpose();
    default: break;
  }
  if (!alphabet) throw DomainError("an alphabet is required for " + to_string(kind));
  ABWord ab = alphabet->product();
  if (kind == ConnectKind::AToAlphaBeta) {
    ABWord target = alphabet->alpha + ab.power(static_cast<std::size_t>(n));
    auto fw = farey_words(static_cast<int>(target.size()));
    std::size_t i = index_of(fw, target);
    return BiSeq(a, Word(), concat(fw, 0, i + 1), to_digits(ab));
  }
  ABWord target = ab.power(static_cast<std::size_t>(n)) + alphabet->beta;
  auto fw = farey_words(static_cast<int>(target.size()));
  std::size_t i = index_of(fw, target);
  return BiSeq(to_digits(ab), Word(), concat(fw, i, fw.size()), b);
}

}  // namespace spectra
