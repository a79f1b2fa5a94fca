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

#include "spectra/ab_words.hpp"

#include <algorithm>
#include <deque>

#include "spectra/error.hpp"

namespace spectra {

Word to_digits(const ABWord& w) {
  std::string s;
  s.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] == 'a' ? "22" : "11";
  return Word::raw(std::move(s));
}

ABWord from_digits(const Word& w) {
  if (w.size() % 2) throw DomainError("odd-length digit word has no {a,b} form: " + w.str());
  std::string s;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    if (w[i] != w[i + 1]) throw DomainError("digit word is not a concatenation of 22 and 11: " + w.str());
    s.push_back(w[i] == '2' ? 'a' : 'b');
  }
  return ABWord::raw(std::move(s));
}

ABWord apply_U(const ABWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] == 'a' ? "ab" : "b";
  return ABWord::raw(std::move(s));
}

ABWord apply_V(const ABWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] == 'a' ? "a" : "ab";
  return ABWord::raw(std::move(s));
}

ABWord apply_subst(const UVWord& W, const ABWord& w) {
  ABWord out = w;
  for (std::size_t i = W.size(); i-- > 0;) out = W[i] == 'U' ? apply_U(out) : apply_V(out);
  return out;
}

OrderedAlphabet pair_U(const OrderedAlphabet& x) {
  return {x.alpha + x.beta, x.beta, x.witness + UVWord("U")};
}

OrderedAlphabet pair_V(const OrderedAlphabet& x) {
  return {x.alpha, x.alpha + x.beta, x.witness + UVWord("V")};
}

OrderedAlphabet alphabet_from_witness(const UVWord& W) {
  return {apply_subst(W, ABWord("a")), apply_subst(W, ABWord("b")), W};
}

OrderedAlphabet alphabet_from_pair(const ABWord& alpha, const ABWord& beta) {
  ABWord x = alpha, y = beta;
  std::string ops;  // last operation first
  while (!(x == ABWord("a") && y == ABWord("b"))) {
    if (x.size() > y.size() && x.ends_with(y)) {
      x = x.substr(0, x.size() - y.size());
      ops += 'U';
    } else if (y.size() > x.size() && y.starts_with(x)) {
      y = y.substr(x.size());
      ops += 'V';
    } else {
      throw DomainError("not an ordered alphabet: (" + alpha.str() + ", " + beta.str() + ")");
    }
  }
  return {alpha, beta, UVWord(std::string(ops.rbegin(), ops.rend()))};
}

std::vector<OrderedAlphabet> enumerate_alphabets(int n) {
  if (n < 0) throw DomainError("enumerate_alphabets: negative depth");
  std::vector<OrderedAlphabet> out{{ABWord("a"), ABWord("b"), UVWord()}};
  std::size_t level_start = 0;
  for (int depth = 1; depth <= n; ++depth) {
    std::size_t level_end = out.size();
    std::vector<OrderedAlphabet> next;
    for (std::size_t i = level_start; i < level_end; ++i) {
      next.push_back(pair_U(out[i]));
      next.push_back(pair_V(out[i]));
    }
    std::sort(next.begin(), next.end(),
              [](const OrderedAlphabet& x, const OrderedAlphabet& y) { return x.witness.str() < y.witness.str(); });
    level_start = level_end;
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

Rational theta(const ABWord& k) {
  if (k.empty()) throw DomainError("theta of the empty word");
  Rational out(static_cast<long>(k.count('b')), static_cast<long>(k.size()));
  out.canonicalize();
  return out;
}

Rational mediant(const Rational& x, const Rational& y) {
  Rational out(x.get_num() + y.get_num(), x.get_den() + y.get_den());
  out.canonicalize();
  return out;
}

ABWord theta_inverse(const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("theta_inverse: argument outside [0, 1]");
  Rational lo(0), hi(1);
  ABWord wl("a"), wh("b");
  if (x == lo) return wl;
  if (x == hi) return wh;
  for (;;) {
    Rational m = mediant(lo, hi);
    ABWord wm = wl + wh;
    if (x == m) return wm;
    if (x < m) {
      hi = m;
      wh = wm;
    } else {
      lo = m;
      wl = wm;
    }
  }
}

std::vector<ABWord> farey_words(int n) {
  if (n < 1) throw DomainError("farey_words: n must be positive");
  // Insert mediants between neighbours while the denominator allows it.
  struct Node {
    Rational x;
    ABWord w;
  };
  std::vector<Node> row{{Rational(0), ABWord("a")}, {Rational(1), ABWord("b")}};
  for (int q = 2; q <= n; ++q) {
    std::vector<Node> next;
    next.reserve(row.size() * 2);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next.push_back(row[i]);
      if (row[i].x.get_den() + row[i + 1].x.get_den() == q)
        next.push_back({mediant(row[i].x, row[i + 1].x), row[i].w + row[i + 1].w});
    }
    next.push_back(row.back());
    row = std::move(next);
  }
  std::vector<ABWord> out;
  out.reserve(row.size());
  for (auto& node : row) out.push_back(std::move(node.w));
  return out;
}

long totient(long n) {
  long out = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

}  // namespace spectra
