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

#include "spectra/biseq.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"

namespace spectra {

BiSeq::BiSeq(Word left_period, Word left_transient, Word right_transient, Word right_period)
    : lp_(std::move(left_period)),
      lt_(std::move(left_transient)),
      rt_(std::move(right_transient)),
      rp_(std::move(right_period)) {
  if (lp_.empty() || rp_.empty()) throw DomainError("BiSeq periods must be nonempty");
}

BiSeq BiSeq::periodic(const Word& period) { return BiSeq(period, Word(), Word(), period); }

int BiSeq::digit(long i) const {
  long nl = static_cast<long>(lt_.size()), nr = static_cast<long>(rt_.size());
  if (i >= nr) {
    long k = (i - nr) % static_cast<long>(rp_.size());
    return rp_.value(static_cast<std::size_t>(k));
  }
  if (i >= 0) return rt_.value(static_cast<std::size_t>(i));
  if (i >= -nl) return lt_.value(static_cast<std::size_t>(nl + i));
  long m = static_cast<long>(lp_.size());
  long j = (-nl - 1 - i) % m;
  return lp_.value(static_cast<std::size_t>(m - 1 - j));
}

Word BiSeq::window(long from, std::size_t len) const {
  std::string s;
  s.reserve(len);
  for (std::size_t k = 0; k < len; ++k) s.push_back(static_cast<char>('0' + digit(from + static_cast<long>(k))));
  return Word::raw(std::move(s));
}

BiSeq BiSeq::shift(long k) const {
  long a = std::min(-static_cast<long>(lt_.size()), k);
  long b = std::max(static_cast<long>(rt_.size()), k);
  Word lp = window(a - static_cast<long>(lp_.size()), lp_.size());
  Word rp = window(b, rp_.size());
  return BiSeq(lp, window(a, static_cast<std::size_t>(k - a)), window(k, static_cast<std::size_t>(b - k)), rp);
}

BiSeq BiSeq::transpose() const {
  return BiSeq(rp_.reversed(), rt_.reversed(), lt_.reversed(), lp_.reversed());
}

std::string expand_letters(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == 'a') out += "22";
    else if (c == 'b') out += "11";
    else if (c == '1' || c == '2') out.push_back(c);
    else if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError(std::string("bad symbol in sequence literal: ") + c);
  }
  return out;
}

namespace {

// Extracts the argument of `name(` ... `)` starting at pos; advances pos.
std::optional<std::string> take_call(std::string_view text, std::size_t& pos, std::string_view name) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.substr(pos, name.size()) != name) return std::nullopt;
  std::size_t open = pos + name.size();
  if (open >= text.size() || text[open] != '(') return std::nullopt;
  std::size_t close = text.find(')', open);
  if (close == std::string_view::npos) throw ParseError("unterminated call in sequence literal");
  pos = close + 1;
  return std::string(text.substr(open + 1, close - open - 1));
}

}  // namespace

BiSeq BiSeq::parse(std::string_view text) {
  std::size_t pos = 0;
  if (auto p = take_call(text, pos, "per")) {
    Word w(expand_letters(*p));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("trailing input after per(...)");
    if (w.empty()) throw ParseError("empty period");
    return periodic(w);
  }
  auto l = take_call(text, pos, "l:per");
  if (!l) throw ParseError("sequence literal must start with per( or l:per(");
  Word lt, rt;
  std::size_t save = pos;
  if (auto m = take_call(text, pos, "mid")) {
    auto bar = m->find('|');
    if (bar == std::string::npos) {
      rt = Word(expand_letters(*m));
    } else {
      lt = Word(expand_letters(m->substr(0, bar)));
      rt = Word(expand_letters(m->substr(bar + 1)));
    }
  } else {
    pos = save;
  }
  auto r = take_call(text, pos, "r:per");
  if (!r) throw ParseError("missing r:per(...)");
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing input in sequence literal");
  Word lp(expand_letters(*l)), rp(expand_letters(*r));
  if (lp.empty() || rp.empty()) throw ParseError("empty period");
  return BiSeq(lp, lt, rt, rp);
}

std::string BiSeq::to_string() const {
  if (lt_.empty() && rt_.empty() && lp_ == rp_) return "per(" + rp_.str() + ")";
  std::string out = "l:per(" + lp_.str() + ")";
  if (!lt_.empty()) out += " mid(" + lt_.str() + "|" + rt_.str() + ")";
  else if (!rt_.empty()) out += " mid(" + rt_.str() + ")";
  return out + " r:per(" + rp_.str() + ")";
}

Word primitive_root(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return w.substr(0, d);
  }
  return w;
}

OneSided forward_from(const BiSeq& s, long i) {
  long nr = static_cast<long>(s.right_transient().size());
  const Word& rp = s.right_period();
  if (i >= nr) return {Word(), rp.rotated(static_cast<std::size_t>((i - nr) % static_cast<long>(rp.size())))};
  return {s.window(i, static_cast<std::size_t>(nr - i)), rp};
}

OneSided backward_from(const BiSeq& s, long i) {
  long nl = static_cast<long>(s.left_transient().size());
  Word rev = s.left_period().reversed();
  if (i < -nl) {
    long j = (-nl - 1 - i) % static_cast<long>(rev.size());
    return {Word(), rev.rotated(static_cast<std::size_t>(j))};
  }
  return {s.window(-nl, static_cast<std::size_t>(i + nl + 1)).reversed(), rev};
}

namespace {

// [s_i; s_{i+1}, ...] as the reciprocal of [0; s_i, s_{i+1}, ...].
QuadSurd forward_value(const BiSeq& s, long i) {
  OneSided f = forward_from(s, i);
  return periodic_cf_value(f.prefix, f.period).reciprocal();
}

// [s_i; s_{i-1}, ...].
QuadSurd backward_value(const BiSeq& s, long i) {
  OneSided b = backward_from(s, i);
  return periodic_cf_value(b.prefix, b.period).reciprocal();
}

QuadSurd step(int digit, const QuadSurd& next) { return next.reciprocal() + QuadSurd(digit); }

}  // namespace

SurdSum lambda_at(const BiSeq& s, long i) {
  return SurdSum(forward_value(s, i)) + SurdSum(backward_value(s, i - 1).reciprocal());
}

namespace {

struct Canonical {
  BiSeq seq;
  long offset;  // canonical index j is original index j + offset
  bool periodic;
};

Canonical canonicalize(const BiSeq& s) {
  Word lp = primitive_root(s.left_period()), rp = primitive_root(s.right_period());
  std::string core = s.left_transient().str() + s.right_transient().str();
  long start = -static_cast<long>(s.left_transient().size());
  std::size_t head = 0;
  while (head < core.size() && core[head] == lp[0]) {
    lp = lp.rotated(1);
    ++head;
  }
  core.erase(0, head);
  start += static_cast<long>(head);
  while (!core.empty() && core.back() == rp.back()) {
    rp = rp.rotated(rp.size() - 1);
    core.pop_back();
  }
  if (core.empty() && lp == rp) return {BiSeq::periodic(rp), start, true};
  return {BiSeq(lp, Word(), Word::raw(core), rp), start, false};
}

struct PeriodicProfile {
  SurdSum max;
  std::optional<SurdSum> second;  // largest value strictly below max
  long argmax = 0;
};

// lambda over one period of the purely periodic sequence, incrementally.
std::vector<SurdSum> periodic_lambdas(const Word& p) {
  BiSeq s = BiSeq::periodic(p);
  long n = static_cast<long>(p.size());
  std::vector<QuadSurd> F(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n));
  F[0] = forward_value(s, 0);
  for (long i = n - 1; i >= 1; --i)
    F[static_cast<std::size_t>(i)] = step(p.value(static_cast<std::size_t>(i)), F[static_cast<std::size_t>((i + 1) % n)]);
  B[static_cast<std::size_t>(n - 1)] = backward_value(s, n - 1);
  for (long i = 0; i < n - 1; ++i)
    B[static_cast<std::size_t>(i)] = step(p.value(static_cast<std::size_t>(i)), B[static_cast<std::size_t>((i + n - 1) % n)]);
  std::vector<SurdSum> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    out.emplace_back(SurdSum(F[static_cast<std::size_t>(i)]) +
                     SurdSum(B[static_cast<std::size_t>((i + n - 1) % n)].reciprocal()));
  return out;
}

PeriodicProfile profile(const Word& p) {
  std::vector<SurdSum> lam = periodic_lambdas(p);
  PeriodicProfile out{lam[0], std::nullopt, 0};
  for (std::size_t i = 1; i < lam.size(); ++i) {
    auto c = lam[i] <=> out.max;
    if (c > 0) {
      out.second = out.max;
      out.max = lam[i];
      out.argmax = static_cast<long>(i);
    } else if (c < 0 && (!out.second || lam[i] > *out.second)) {
      out.second = lam[i];
    }
  }
  return out;
}

// Lower bound F_{d+1} F_{d+2} for q_d (q_d + q_{d-1}) over words of length d.
Integer fib_product(long d) {
  Integer a = 1, b = 1;  // F_1, F_2
  for (long k = 1; k <= d; ++k) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a * b;
}

}  // namespace

MarkovValue markov_value(const BiSeq& s, const MarkovBudget& budget) {
  Canonical c = canonicalize(s);
  if (c.periodic) {
    PeriodicProfile pr = profile(c.seq.right_period());
    return {pr.max, true, pr.argmax + c.offset};
  }
  const BiSeq& t = c.seq;
  PeriodicProfile left = profile(t.left_period()), right = profile(t.right_period());
  const SurdSum& M = left.max > right.max ? left.max : right.max;
  long core = static_cast<long>(t.right_transient().size());
  long nl = static_cast<long>(t.left_period().size()), nr = static_cast<long>(t.right_period().size());
  long d = std::max<long>(1, 2 * (nl + nr + core));
  for (int round = 0; round <= budget.max_doublings; ++round, d *= 2) {
    long lo = -d, hi = core + d - 1;
    std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<QuadSurd> F(n), Bk(n + 1);  // Bk[k] = backward value at lo - 1 + k
    F[n - 1] = forward_value(t, hi);
    for (long i = hi - 1; i >= lo; --i)
      F[static_cast<std::size_t>(i - lo)] = step(t.digit(i), F[static_cast<std::size_t>(i - lo + 1)]);
    Bk[0] = backward_value(t, lo - 1);
    for (std::size_t k = 1; k <= n; ++k) Bk[k] = step(t.digit(lo - 1 + static_cast<long>(k)), Bk[k - 1]);
    SurdSum W;
    long arg = lo;
    for (std::size_t k = 0; k < n; ++k) {
      SurdSum lam = SurdSum(F[k]) + SurdSum(Bk[k].reciprocal());
      if (k == 0 || lam > W) {
        W = lam;
        arg = lo + static_cast<long>(k);
      }
    }
    Rational err(1, fib_product(d));
    if (W > M + SurdSum(err)) return {W, true, arg + c.offset};

    bool exceeds = false;
    auto side_ok = [&](const PeriodicProfile& side) {
      if (side.max < M) return side.max + SurdSum(err) < M;
      return !side.second || *side.second + SurdSum(err) < M;
    };
    if (!(left.max < M))
      for (long j = lo - 1; j >= lo - 2 * nl && !exceeds; --j) exceeds = lambda_at(t, j) > M;
    if (!(right.max < M))
      for (long j = hi + 1; j <= hi + 2 * nr && !exceeds; ++j) exceeds = lambda_at(t, j) > M;
    if (exceeds || !side_ok(left) || !side_ok(right)) continue;
    if (W >= M) return {W, true, arg + c.offset};
    return {M, false, std::nullopt};
  }
  throw BudgetExceeded("markov_value: window growth limit reached for " + s.to_string());
}

}  // namespace spectra
