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

#include "spectra/renorm.hpp"

#include <algorithm>

#include "spectra/error.hpp"

namespace spectra {

ABWord WeakRenormalization::kernel() const {
  ABWord out;
  for (char c : factorization) out += c == 'A' ? alphabet.alpha : alphabet.beta;
  return out;
}

WeakRenormalization trivial_decomposition(const ABWord& w) {
  std::string f;
  for (std::size_t i = 0; i < w.size(); ++i) f.push_back(w[i] == 'a' ? 'A' : 'B');
  return {ABWord(), f, OrderedAlphabet{ABWord("a"), ABWord("b"), UVWord()}, ABWord()};
}

void check_invariants(const WeakRenormalization& r) {
  const ABWord& u = r.alphabet.alpha;
  const ABWord& v = r.alphabet.beta;
  ABWord ab = u + v;
  std::size_t bound = std::max(u.size(), v.size());
  auto fail = [&](const std::string& what) {
    throw NotRenormalizable("decomposition over (" + u.str() + "," + v.str() + ") violates: " + what);
  };
  if (r.alphabet.depth() > 0) {
    if (r.w1.size() >= bound) fail("|w1| < max(|alpha|,|beta|)");
    if (r.w2.size() >= bound) fail("|w2| < max(|alpha|,|beta|)");
  }
  if (!ab.ends_with(r.w1)) fail("w1 is a suffix of alpha beta");
  if (!ab.starts_with(r.w2)) fail("w2 is a prefix of alpha beta");
  const UVWord& W = r.alphabet.witness;
  if (!W.empty() && !r.factorization.empty()) {
    // Last pair operation decides the shape: U gives (uv, v), V gives (u, uv).
    if (W.back() == 'V' && r.factorization.back() == 'A') {
      ABWord vv = v.substr(u.size());  // beta = u v
      if (r.w2.size() < vv.size()) fail("kernel ends with alpha so |v| <= |w2|");
    }
    if (W.back() == 'U' && r.factorization.front() == 'B') {
      ABWord uu = u.substr(0, u.size() - v.size());  // alpha = u v
      if (r.w1.size() < uu.size()) fail("kernel starts with beta so |u| <= |w1|");
    }
  }
}

WeakRenormalization renorm_step(const WeakRenormalization& r, StepKind kind) {
  if (r.factorization.empty()) throw NotRenormalizable("empty kernel");
  const std::string& f = r.factorization;
  bool has_uu = f.find("AA") != std::string::npos;
  bool has_vv = f.find("BB") != std::string::npos;
  if (kind == StepKind::Auto) {
    if (has_uu && has_vv) throw NotRenormalizable("kernel contains both alpha alpha and beta beta: " + f);
    kind = has_uu ? StepKind::ToU_UV : StepKind::ToUV_V;
  } else if (kind == StepKind::ToUV_V && has_uu) {
    throw NotRenormalizable("kernel contains alpha alpha, (uv, v) step impossible");
  } else if (kind == StepKind::ToU_UV && has_vv) {
    throw NotRenormalizable("kernel contains beta beta, (u, uv) step impossible");
  }
  const ABWord& u = r.alphabet.alpha;
  const ABWord& v = r.alphabet.beta;
  WeakRenormalization out;
  out.w1 = r.w1;
  out.w2 = r.w2;
  std::string g;
  if (kind == StepKind::ToUV_V) {
    out.alphabet = pair_U(r.alphabet);
    std::size_t i = 0;
    while (i < f.size()) {
      if (f[i] == 'A') {
        if (i + 1 < f.size()) {
          g.push_back('A');
          i += 2;
        } else {
          out.w2 = u + out.w2;  // trailing u
          ++i;
        }
      } else {
        g.push_back('B');
        ++i;
      }
    }
    std::size_t k = 0;
    while (k < g.size() && g[k] == 'B' && out.w1.size() < u.size()) {
      out.w1 += v;
      ++k;
    }
    g.erase(0, k);
  } else {
    out.alphabet = pair_V(r.alphabet);
    std::size_t i = 0;
    if (f[0] == 'B') {
      out.w1 += v;  // leading v
      i = 1;
    }
    while (i < f.size()) {
      if (i + 1 < f.size() && f[i + 1] == 'B') {
        g.push_back('B');
        i += 2;
      } else {
        g.push_back('A');
        ++i;
      }
    }
    while (!g.empty() && g.back() == 'A' && out.w2.size() < v.size()) {
      out.w2 = u + out.w2;
      g.pop_back();
    }
  }
  out.factorization = g;
  if (out.reassemble() != r.reassemble()) throw NotRenormalizable("internal: reassembly mismatch");
  check_invariants(out);
  return out;
}

Extension ab_extension(const Word& w) {
  if (w.empty()) throw NoValidExtension("empty word");
  auto ok = [](const Word& x) {
    if (x.size() % 2) return false;
    for (std::size_t i = 0; i < x.size(); i += 2)
      if (x[i] != x[i + 1]) return false;
    return true;
  };
  Word first = Word::raw(std::string(1, w.front())), last = Word::raw(std::string(1, w.back()));
  const Extension candidates[] = {
      {w, false, false}, {w + last, false, true}, {first + w, true, false}, {first + w + last, true, true}};
  for (const auto& c : candidates)
    if (ok(c.word)) return c;
  throw NoValidExtension("no extension of at most one digit per side is an {a,b}-word: " + w.str());
}

AlphabetResult find_alphabet(const Word& w, int n) {
  Extension ext = ab_extension(w);
  WeakRenormalization r = trivial_decomposition(from_digits(ext.word));
  while (2 * static_cast<int>(r.alphabet.product().size()) < n) r = renorm_step(r);
  return {ext, r};
}

WeakRenormalization semi_renormalize(const Word& w, const OrderedAlphabet& alphabet) {
  Extension ext = ab_extension(w);
  WeakRenormalization r = trivial_decomposition(from_digits(ext.word));
  for (std::size_t i = 0; i < alphabet.witness.size(); ++i)
    r = renorm_step(r, alphabet.witness[i] == 'U' ? StepKind::ToUV_V : StepKind::ToU_UV);
  return r;
}

}  // namespace spectra
