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

#include "spectra/patterns.hpp"

#include <mpfr.h>

#include <set>

#include "spectra/error.hpp"
#include "spectra/threshold.hpp"

namespace spectra {

namespace {

ABWord plus(const ABWord& u) { return u.size() > 1 ? u.drop_first() : ABWord(); }
ABWord minus(const ABWord& v) { return v.size() > 1 ? v.drop_last() : ABWord(); }

bool at(const std::string& s, std::size_t i, const std::string& p) {
  return i + p.size() <= s.size() && s.compare(i, p.size(), p) == 0;
}

// Copies of p ending exactly at position j.
std::size_t copies_before(const std::string& s, std::size_t j, const std::string& p) {
  std::size_t k = 0;
  while (j >= (k + 1) * p.size() && at(s, j - (k + 1) * p.size(), p)) ++k;
  return k;
}

std::string repeat(const std::string& p, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += p;
  return out;
}

}  // namespace

std::vector<ABWord> b_words(const ABWord& u, const ABWord& v) {
  ABWord a("a"), b("b");
  ABWord up = plus(u), vm = minus(v);
  return {b + up + u.power(2) + v + u.power(3) + vm + a, b + up + u + v + u.power(2) + vm + a,
          b + up + u + v + u.power(2) + v + u.power(2) + vm + a,
          b + up + u + v + u + v + u.power(2) + v + u + vm + a};
}

Rational exp_neg_upper(long r) {
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_si(x, -r, MPFR_RNDU);
  mpfr_exp(x, x, MPFR_RNDU);
  mpz_t m;
  mpz_init(m);
  mpfr_exp_t e = mpfr_get_z_2exp(m, x);
  Rational q{mpz_class(m)};
  mpz_clear(m);
  mpfr_clear(x);
  if (e >= 0) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= f;
  } else {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= f;
  }
  q.canonicalize();
  return q;
}

PatternReport forbidden_pattern_check(const Word& w, const OrderedAlphabet& alphabet, int n, bool verify,
                                      const MembershipBudget& budget) {
  if (n < 1) throw DomainError("n must be positive");
  const std::string s = w.str();
  const std::string A = to_digits(alphabet.alpha).str(), B = to_digits(alphabet.beta).str();
  const std::size_t long_cap = 3 * static_cast<std::size_t>(n) + 2;
  PatternReport rep;
  auto add = [&](const char* name, std::size_t pos, std::size_t len, bool applicable) {
    rep.hits.push_back({name, pos, Word(s.substr(pos, len)), applicable, std::nullopt});
  };

  // Shortest {u, v} word from each u u to a v v.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!at(s, i, A + A)) continue;
    std::set<std::size_t> seen{i + 2 * A.size()};
    std::vector<std::size_t> frontier{i + 2 * A.size()};
    std::size_t best = std::string::npos;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t p : frontier) {
        if (at(s, p, B + B)) best = std::min(best, p + 2 * B.size());
        for (const std::string* piece : {&A, &B})
          if (at(s, p, *piece) && seen.insert(p + piece->size()).second) next.push_back(p + piece->size());
      }
      frontier = std::move(next);
    }
    if (best != std::string::npos) add("alpha2beta2", i, best - i, best - i <= long_cap);
  }

  // u^r1 v u^r2 v with r2 <= r1 - 2; r1 taken maximal.
  for (std::size_t r2 = 1; r2 * A.size() + 2 * B.size() <= s.size(); ++r2) {
    std::string tail = B + repeat(A, r2) + B;
    for (std::size_t j = 0; j + tail.size() <= s.size(); ++j) {
      if (!at(s, j, tail)) continue;
      std::size_t r1 = copies_before(s, j, A);
      if (r1 < r2 + 2) continue;
      std::size_t start = j - r1 * A.size();
      add("force", start, j + tail.size() - start, j + tail.size() - start <= long_cap);
    }
  }
  // u v^r1 u v^r2 u v with r2 <= r1 - 2.
  for (std::size_t r2 = 1; 2 * A.size() + (r2 + 1) * B.size() <= s.size(); ++r2) {
    std::string tail = A + repeat(B, r2) + A + B;
    for (std::size_t j = 0; j + tail.size() <= s.size(); ++j) {
      if (!at(s, j, tail)) continue;
      std::size_t kmax = copies_before(s, j, B);
      for (std::size_t r1 = kmax; r1 >= r2 + 2; --r1) {
        std::size_t bstart = j - r1 * B.size();
        if (bstart < A.size() || !at(s, bstart - A.size(), A)) continue;
        std::size_t start = bstart - A.size();
        add("force-dual", start, j + tail.size() - start, j + tail.size() - start <= long_cap);
        break;
      }
    }
  }

  std::vector<ABWord> bw = b_words(alphabet.alpha, alphabet.beta);
  std::size_t u2v = 2 * A.size() + B.size(), uv = A.size() + B.size();
  for (std::size_t k = 0; k < bw.size(); ++k) {
    std::string p = to_digits(bw[k]).str();
    bool applicable = k < 3 ? u2v <= static_cast<std::size_t>(n) : 2 * uv <= static_cast<std::size_t>(n);
    static const char* names[] = {"w0", "w1", "w2", "w3"};
    for (std::size_t j = s.find(p); j != std::string::npos; j = s.find(p, j + 1)) add(names[k], j, p.size(), applicable);
  }

  if (verify) {
    QuadSurd t(scaled_threshold(n));
    for (auto& h : rep.hits)
      if (h.applicable) h.verified = membership(h.factor, t, budget).verdict;
  }
  return rep;
}

}  // namespace spectra
