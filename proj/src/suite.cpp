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

#include "spectra/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "spectra/ab_words.hpp"
#include "spectra/biseq.hpp"
#include "spectra/connect.hpp"
#include "spectra/cuts.hpp"
#include "spectra/dimension.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"
#include "spectra/language.hpp"
#include "spectra/threshold.hpp"

namespace spectra {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

using Rng = std::mt19937_64;

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

ABWord random_ab(Rng& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? 'a' : 'b';
  return ABWord(s);
}

UVWord random_uv(Rng& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? 'U' : 'V';
  return UVWord(s);
}

Word random_digits(Rng& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? '2' : '1';
  return Word(s);
}

std::vector<UVWord> all_uv(std::size_t max_len) {
  std::vector<UVWord> out{UVWord()}, layer{UVWord()};
  for (std::size_t k = 0; k < max_len; ++k) {
    std::vector<UVWord> next;
    for (const auto& w : layer)
      for (const char* c : {"U", "V"}) next.push_back(w + UVWord(c));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

ABWord plus(const ABWord& w) { return w.drop_first(); }
ABWord minus(const ABWord& w) { return w.drop_last(); }

// Pair reduction back to (a, b): (uv, v) -> (u, v) and (u, uv) -> (u, v).
bool reduces_to_root(ABWord x, ABWord y) {
  while (!(x == ABWord("a") && y == ABWord("b"))) {
    if (x.size() > y.size() && x.ends_with(y)) x = x.substr(0, x.size() - y.size());
    else if (y.size() > x.size() && y.starts_with(x)) y = y.substr(x.size());
    else return false;
  }
  return true;
}

// Reduced fractions in [0, 1] with denominator <= n, increasing.
std::vector<Rational> farey_fractions(int n) {
  std::vector<Rational> out;
  for (int q = 1; q <= n; ++q)
    for (int p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Word> in_words(const LanguageSet& s) {
  std::vector<Word> w = s.words(Verdict::In);
  return {w.begin(), w.end()};
}

bool has_isolated(const Word& w) { return w.contains(Word("121")) || w.contains(Word("212")); }

// ---- criteria ----

void c1_exact_values(const SuiteConfig&, Outcome& o) {
  struct Case {
    const char* period;
    QuadSurd expected;
    const char* label;
  };
  const Case cases[] = {{"11", QuadSurd::sqrt(5), "sqrt5"},
                        {"22", QuadSurd::sqrt(8), "sqrt8"},
                        {"2211", QuadSurd::sqrt(221) / QuadSurd(5), "sqrt221/5"}};
  for (const auto& c : cases) {
    MarkovValue v = markov_value(BiSeq::periodic(Word(c.period)));
    if (!(v.value == SurdSum(c.expected))) o.fail(std::string("per(") + c.period + ") = " + v.value.to_string());
    o.detail << "per(" << c.period << ")=" << v.value.to_string() << " ";
  }
}

void c2_language_oracle(const SuiteConfig& cfg, Outcome& o) {
  std::size_t total = 0;
  for (int n = 1; n <= 24; ++n) {
    LanguageSet e = sigma_enumerate(QuadSurd(3), n, {}, cfg.workers);
    LanguageSet f = sigma3_factors(n);
    std::set<Word> a = in_words(e), b = in_words(f);
    if (e.count(Verdict::Unresolved) != 0) o.fail("Unresolved words at n=" + std::to_string(n));
    if (a != b) o.fail("enumeration and factor oracle differ at n=" + std::to_string(n));
    for (const auto* s : {&a, &b})
      for (const auto& w : *s) {
        if (has_isolated(w)) o.fail("121/212 inside " + w.str());
        if (!s->count(w.reversed())) o.fail("not reversal-closed at " + w.str());
      }
    total += a.size();
  }
  o.detail << "n=1..24 words=" << total << " ";
}

void c3_palabras(const SuiteConfig& cfg, Outcome& o) {
  const int n = 68;
  QuadSurd t(scaled_threshold(n));
  LanguageSet base = sigma3_factors(n);
  std::set<Word> sigma3 = in_words(base);
  o.detail << "|Sigma(3,68)|=" << sigma3.size() << " ";

  if (cfg.full) {
    LanguageSet e = sigma_enumerate(t, n, {}, cfg.workers);
    std::set<Word> got = in_words(e);
    std::size_t open = e.count(Verdict::Unresolved);
    if (open) o.fail(std::to_string(open) + " Unresolved at 3+6^-204");
    if (got != sigma3) o.fail("Sigma(3+6^-204,68) != Sigma(3,68)");
    o.detail << "full: |Sigma(3+6^-204,68)|=" << got.size() << " unresolved=" << open << " ";
  }

  // Sampled gate: members stay In; one-digit extensions of Sigma(3,67) that
  // leave Sigma(3,68) are Out.
  Rng rng(cfg.seed ^ 0x68);
  std::vector<Word> members(sigma3.begin(), sigma3.end());
  std::vector<Word> outside;
  for (const auto& w : sigma3_factors(n - 1).words(Verdict::In))
    for (const char* d : {"1", "2"})
      for (Word c : {w + Word(d), Word(d) + w})
        if (!sigma3.count(c) && !has_isolated(c)) outside.push_back(c);
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  std::shuffle(members.begin(), members.end(), rng);
  std::shuffle(outside.begin(), outside.end(), rng);
  std::size_t k_in = std::min<std::size_t>(500, members.size()), k_out = std::min<std::size_t>(500, outside.size());
  std::size_t bad_in = 0, bad_out = 0;
  for (std::size_t i = 0; i < k_in; ++i)
    if (membership(members[i], t).verdict != Verdict::In) ++bad_in;
  for (std::size_t i = 0; i < k_out; ++i)
    if (membership(outside[i], t).verdict != Verdict::Out) ++bad_out;
  if (bad_in || bad_out) o.fail("sampled gate mismatches in=" + std::to_string(bad_in) + " out=" + std::to_string(bad_out));
  if (k_out < 500) o.fail("only " + std::to_string(k_out) + " boundary words to sample");
  o.detail << "gate: " << k_in << " In + " << k_out << " Out samples ";
}

void c4_farey(const SuiteConfig&, Outcome& o) {
  for (int n = 1; n <= 100; ++n) {
    std::vector<ABWord> fw = farey_words(n);
    std::vector<Rational> fr = farey_fractions(n);
    if (fw.size() != fr.size()) {
      o.fail("|F_" + std::to_string(n) + "| mismatch");
      continue;
    }
    for (std::size_t i = 0; i < fw.size(); ++i)
      if (theta(fw[i]) != fr[i]) o.fail("theta mismatch in F_" + std::to_string(n) + " at " + fw[i].str());
    for (std::size_t i = 0; i + 1 < fw.size(); ++i) {
      if (!reduces_to_root(fw[i], fw[i + 1])) o.fail("adjacent pair is not an alphabet: " + fw[i].str() + "," + fw[i + 1].str());
      if (theta(fw[i] + fw[i + 1]) != mediant(theta(fw[i]), theta(fw[i + 1]))) o.fail("theta(alpha beta) != mediant");
    }
  }
  std::size_t checked = 0;
  for (int q = 1; q <= 200; ++q)
    for (int p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      if (theta(theta_inverse(x)) != x) o.fail("theta(theta_inverse(" + to_string(x) + ")) != itself");
      ++checked;
    }
  // Every alphabet of depth <= 10 is adjacent in F_max(|alpha|,|beta|).
  std::size_t alph = 0;
  std::map<int, std::vector<ABWord>> cache;
  for (const auto& a : enumerate_alphabets(10)) {
    int m = static_cast<int>(std::max(a.alpha.size(), a.beta.size()));
    if (m > 100) continue;
    auto [slot, fresh] = cache.try_emplace(m);
    if (fresh) slot->second = farey_words(m);
    const std::vector<ABWord>& fw = slot->second;
    auto it = std::find(fw.begin(), fw.end(), a.alpha);
    if (it == fw.end() || it + 1 == fw.end() || *(it + 1) != a.beta)
      o.fail("alphabet " + a.alpha.str() + "," + a.beta.str() + " not adjacent in F_" + std::to_string(m));
    ++alph;
  }
  o.detail << "F_1..F_100 ok, theta round trips=" << checked << ", alphabets adjacent=" << alph << " ";
}

void c5_farey_triples(const SuiteConfig&, Outcome& o) {
  std::set<std::string> seen;
  std::size_t triples = 0;
  QuadSurd three(3);
  for (int n = 1; n <= 10; ++n) {
    std::vector<ABWord> fw = farey_words(n);
    for (std::size_t i = 0; i + 2 < fw.size(); ++i) {
      ABWord w = fw[i] + fw[i + 1] + fw[i + 2];
      if (!seen.insert(w.str()).second) continue;
      ++triples;
      Verdict full = membership(to_digits(w), three).verdict;
      Verdict left = membership(to_digits(w.drop_first()), three).verdict;
      Verdict right = membership(to_digits(w.drop_last()), three).verdict;
      if (full != Verdict::Out) o.fail(w.str() + " is " + to_string(full));
      if (left != Verdict::In) o.fail(w.drop_first().str() + " is " + to_string(left));
      if (right != Verdict::In) o.fail(w.drop_last().str() + " is " + to_string(right));
    }
  }
  o.detail << "distinct triples=" << triples << " ";
}

void c6_identities(const SuiteConfig& cfg, Outcome& o) {
  std::size_t alph = 0;
  for (const auto& a : enumerate_alphabets(12)) {
    if (a.alpha + a.beta != minus(a.beta) + ABWord("ab") + plus(a.alpha))
      o.fail("alpha beta != beta- ab alpha+ for witness " + a.witness.str());
    ++alph;
  }
  Rng rng(cfg.seed ^ 0x6);
  for (int i = 0; i < 10000; ++i) {
    ABWord w = random_ab(rng, rng() % 65);
    UVWord W = random_uv(rng, rng() % 11);
    if (ABWord("b") + apply_U(w.reversed()) != apply_U(w).reversed() + ABWord("b")) o.fail("b U(w*) != U(w)* b for " + w.str());
    if (apply_V(w.reversed()) + ABWord("a") != ABWord("a") + apply_V(w).reversed()) o.fail("V(w*) a != a V(w)* for " + w.str());
    ABWord u = apply_subst(W, ABWord("a")), v = apply_subst(W, ABWord("b"));
    ABWord lhs = (plus(u) + apply_subst(W, w) + minus(v)).reversed();
    ABWord rhs = plus(u) + apply_subst(W, w.reversed()) + minus(v);
    if (lhs != rhs) o.fail("transposition identity fails for W=" + W.str() + " w=" + w.str());
  }
  o.detail << "alphabets=" << alph << " random pairs=10000 ";
}

void c7_sandwich(const SuiteConfig& cfg, Outcome& o) {
  Rng rng(cfg.seed ^ 0x7);
  std::size_t cases = 0;
  for (int i = 0; i < 1000; ++i) {
    Word w = to_digits(random_ab(rng, rng() % 8));  // digit length <= 14
    Word lt = random_digits(rng, rng() % 4), rt = random_digits(rng, rng() % 4);
    BiSeq s(random_digits(rng, 1 + rng() % 3), lt + Word("11") + w.reversed() + Word("11"),
            Word("22") + w + Word("22") + rt, random_digits(rng, 1 + rng() % 3));
    SurdSum excess = lambda_at(s, 0) - SurdSum(3);
    Rational len = w.empty() ? Rational(1) : cylinder(w).length;
    if (!(excess > SurdSum(Rational(len / 144)))) o.fail("lower sandwich at " + s.to_string());
    if (!(excess < SurdSum(Rational(len / 3)))) o.fail("upper sandwich at " + s.to_string());
    if (!(excess > SurdSum(rational_pow(Rational(6), -static_cast<long>(w.size() + 5)))))
      o.fail("6^-(|w|+5) bound at " + s.to_string());
    ++cases;
  }
  o.detail << "constructions=" << cases << " ";
}

void c8_cuts(const SuiteConfig& cfg, Outcome& o) {
  if (classify_cut(Cut::parse("2211|2211")).kind != CutKind::Good) o.fail("2211|2211 not Good");
  if (classify_cut(Cut::parse("2222|1111")).kind != CutKind::Bad) o.fail("2222|1111 not Bad");

  struct Base {
    const char* cut;
    PushKind kind;
  };
  const Base bases[] = {{"ab|ab", PushKind::GoodSymmetric},     {"abab|abab", PushKind::GoodSymmetric},
                        {"aa|bb", PushKind::BadSymmetric},      {"aba|bab", PushKind::GoodAsymmetric},
                        {"abba|babb", PushKind::GoodAsymmetric}, {"abb|aab", PushKind::BadAsymmetric}};
  std::vector<UVWord> Ws = all_uv(3);
  std::size_t pushed = 0, skipped = 0;
  for (const auto& b : bases) {
    Cut c = Cut::parse(b.cut);
    CutKind want = classify_cut(c).kind;
    if (want != CutKind::Good && want != CutKind::Bad) o.fail(std::string("base cut ") + b.cut + " unresolved");
    for (const auto& W : Ws) {
      try {
        Cut img = push_cut(W, c, b.kind);
        CutKind got = classify_cut(img).kind;
        if (got != want) o.fail(to_string(b.kind) + " W=" + W.str() + " gives " + img.to_string() + " " + to_string(got));
        ++pushed;
      } catch (const TemplateMismatch&) {
        ++skipped;
      }
    }
  }
  o.detail << "pushes=" << pushed << " (side conditions unmet=" << skipped << ") ";

  Rng rng(cfg.seed ^ 0x8);
  std::size_t instances = 0, failures = 0;
  std::string first;
  while (instances < 100) {
    ABWord X = random_ab(rng, 1 + rng() % 3), R = random_ab(rng, 1 + rng() % 3), Y = random_ab(rng, 1 + rng() % 3);
    UVWord W = Ws[rng() % Ws.size()];
    try {
      ControlReport r = check_control(X, R, Y, W);
      ++instances;
      if (!r.conclusion) {
        if (!failures) first = "X=" + X.str() + " R=" + R.str() + " Y=" + Y.str() + " W=" + W.str();
        ++failures;
      }
    } catch (const PreconditionUnverified&) {
    }
  }
  if (failures) o.fail("control conclusion fails on " + std::to_string(failures) + "/100, e.g. " + first);
  o.detail << "control instances=" << instances << " failures=" << failures << " ";
}

void c9_dimension(const SuiteConfig& cfg, Outcome& o) {
  std::vector<DimBracket> levels;
  for (int m : {4, 8, 12}) {
    std::vector<Word> words;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
      std::string s;
      for (int i = 0; i < m; ++i) s += (bits >> i) & 1 ? '2' : '1';
      words.push_back(Word(s));
    }
    levels.push_back(moran_bracket(words, BracketMode::ChainRule, cfg.workers));
  }
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i + 1].lower < levels[i].lower || levels[i + 1].upper > levels[i].upper)
      o.fail("brackets at levels 4/8/12 not nested");
  const DimBracket& top = levels.back();
  if (top.upper - top.lower > 0.02) o.fail("level-12 width " + fmt(top.upper - top.lower));
  if (!(top.lower <= 0.5313 && 0.5313 <= top.upper)) o.fail("0.5313 outside the level-12 bracket");
  o.detail << "{1,2} level 12: [" << fmt(top.lower) << ", " << fmt(top.upper) << "] ";

  double prev = 2;
  o.detail << "d_upper(3+6^-3n, 12):";
  for (int n = 2; n <= 6; ++n) {
    DUpper d = d_upper(QuadSurd(scaled_threshold(n)), 12, {}, cfg.workers);
    if (d.value > prev) o.fail("d_upper not monotone at n=" + std::to_string(n));
    prev = d.value;
    o.detail << " " << fmt(d.value);
  }
  DUpper cap = d_upper(QuadSurd::sqrt(12), 8, {}, cfg.workers);
  if (!(cap.value == 1 && cap.capped)) o.fail("d_upper(sqrt12, 8) = " + fmt(cap.value));
  o.detail << "; d_upper(sqrt12, 8)=" << fmt(cap.value) << (cap.capped ? " capped " : " ");
}

double lambert_h(double w) { return w * std::exp(w); }

void c10_asymptotics(const SuiteConfig& cfg, Outcome& o) {
  Rng rng(cfg.seed ^ 0x10);
  std::uniform_real_distribution<double> ys(0.0, 1e6), rhos(-200.0, -0.5);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    double y = ys(rng);
    double err = std::abs(lambert_h(lambert_inv(y)) - y) / std::max(1.0, std::abs(y));
    worst = std::max(worst, err);
  }
  if (worst > 1e-12) o.fail("lambert round trip error " + fmt(worst));
  if (lambert_inv(0) != 0 || std::abs(lambert_inv(std::exp(1.0)) - 1) > 1e-12) o.fail("lambert fixed points");
  for (int i = 0; i < 100; ++i) {
    double rho = std::exp(rhos(rng)), L = -std::log(rho);
    double lhs = d_asymptotic(rho) * L / 2, rhs = lambert_inv(std::exp(asym_c0()) * L);
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, rhs)) o.fail("d_asymptotic identity at rho=" + fmt(rho));
  }
  double tb = thm2_bound(std::exp(-100.0), 0);
  if (std::abs(tb - 0.0307793) > 1e-6) o.fail("thm2_bound(e^-100, 0) = " + fmt(tb, 9));
  if (std::abs(thm2_bound(std::exp(-100.0), 3) - tb - 0.03) > 1e-12) o.fail("thm2 C-shift");

  double prev = 1;
  for (int n = 2; n <= 40; ++n) {
    double v = d_asymptotic_log(3.0 * n * std::log(6.0));
    if (!(v < prev)) o.fail("d_asymptotic not decreasing at n=" + std::to_string(n));
    prev = v;
  }
  // Shape: value |log rho| / log|log rho| over rho in [6^-120, 6^-6].
  double lo = 1e300, hi = 0, need_c = -1e300;
  for (int k = 6; k <= 120; ++k) {
    double L = k * std::log(6.0);
    double r = d_asymptotic_log(L) * L / std::log(L);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    need_c = std::max(need_c, (d_asymptotic_log(L) / 2) * L - (std::log(L) - std::log(std::log(L))));
  }
  if (!(lo > 0 && std::isfinite(hi) && hi / lo < 2)) o.fail("shape constants not bounded");
  o.detail << "lambert err=" << fmt(worst, 3) << " thm2=" << fmt(tb, 9) << " fitted C1=" << fmt(lo, 4)
           << " C2=" << fmt(hi, 4) << " dominance C>=" << fmt(need_c, 4) << " ";
}

void c11_connecting(const SuiteConfig&, Outcome& o) {
  std::optional<SurdSum> prev;
  for (int n = 3; n <= 12; ++n) {
    MarkovValue v = markov_value(connecting_sequence(ConnectKind::AB, n));
    if (!(v.value > SurdSum(3))) o.fail("value not above 3 at n=" + std::to_string(n));
    if (prev && v.value > *prev) o.fail("value increases at n=" + std::to_string(n));
    prev = v.value;
    o.detail << (n == 3 ? "" : " ") << fmt(v.value.to_double(), 12);
  }
  o.detail << " ";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(const SuiteConfig&, Outcome&);
};

const Criterion kCriteria[] = {
    {1, "exact spectrum values", 1, c1_exact_values},
    {2, "language oracle agreement n<=24", 120, c2_language_oracle},
    {3, "Sigma(3+6^-3n,n) = Sigma(3,n) at n=68", 1800, c3_palabras},
    {4, "Farey and alphabet structure", 30, c4_farey},
    {5, "Farey triples", 300, c5_farey_triples},
    {6, "word identities", 60, c6_identities},
    {7, "interval sandwiches", 120, c7_sandwich},
    {8, "cut calculus", 300, c8_cuts},
    {9, "dimension brackets", 120, c9_dimension},
    {10, "asymptotics", 60, c10_asymptotics},
    {11, "connecting sequences", 60, c11_connecting},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), c.id) == config.only.end()) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(config, o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.limit_seconds = c.limit;
    if (r.seconds > r.limit_seconds) o.fail("runtime " + fmt(r.seconds, 4) + " s over " + fmt(r.limit_seconds, 4) + " s");
    r.pass = o.pass;
    r.detail = o.detail.str();
    while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << fmt(r.seconds, 4) << " s / "
    << fmt(r.limit_seconds, 5) << " s): " << r.detail;
  return s.str();
}

}  // namespace spectra
