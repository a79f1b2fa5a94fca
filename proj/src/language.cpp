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

#include "spectra/language.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "spectra/bounds.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"

namespace spectra {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::Out: return "Out";
    default: return "Unresolved";
  }
}

namespace {

constexpr std::uint64_t kBase = 1000003ULL;

std::uint64_t hash_digits(std::string_view s) {
  std::uint64_t h = 0;
  for (char c : s) h = h * kBase + static_cast<std::uint64_t>(c);
  return h;
}

std::size_t default_period_cap(std::size_t n) { return 4 * n + 16; }

// Period digit words of c(A) plus 22 and 11 with at most `max_digits` digits,
// ordered by length and then by theta.
std::vector<Word> christoffel_periods(std::size_t max_digits) {
  int letters = static_cast<int>(std::max<std::size_t>(1, max_digits / 2));
  std::vector<ABWord> fw = farey_words(letters);
  std::vector<Word> out;
  out.reserve(fw.size());
  for (const auto& k : fw) out.push_back(to_digits(k));
  std::stable_sort(out.begin(), out.end(), [](const Word& x, const Word& y) { return x.size() < y.size(); });
  return out;
}

std::string cyclic_text(const Word& p, std::size_t n) {
  std::string s;
  s.reserve(p.size() + n);
  while (s.size() < p.size() + n - 1) s += p.str();
  return s;
}

}  // namespace

PeriodicWitnessIndex::PeriodicWitnessIndex(std::size_t word_length, std::size_t max_period_digits)
    : n_(word_length), periods_(christoffel_periods(max_period_digits)) {
  if (n_ == 0) throw DomainError("witness index for empty words");
  std::uint64_t top = 1;  // kBase^(n-1)
  for (std::size_t i = 1; i < n_; ++i) top *= kBase;
  for (std::size_t idx = 0; idx < periods_.size(); ++idx) {
    const Word& p = periods_[idx];
    std::string text = cyclic_text(p, n_);
    std::uint64_t h = hash_digits(std::string_view(text).substr(0, n_));
    for (std::size_t s = 0;; ++s) {
      first_.try_emplace(h, static_cast<std::uint32_t>(idx));
      if (s + 1 >= p.size()) break;
      h = (h - top * static_cast<std::uint64_t>(text[s])) * kBase + static_cast<std::uint64_t>(text[s + n_]);
    }
  }
}

const SurdSum& PeriodicWitnessIndex::value_of(std::size_t idx) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = values_.find(idx);
    if (it != values_.end()) return it->second;
  }
  SurdSum v = markov_value(BiSeq::periodic(periods_[idx])).value;
  std::lock_guard<std::mutex> lock(mu_);
  return values_.emplace(idx, std::move(v)).first->second;
}

std::optional<std::size_t> PeriodicWitnessIndex::occurrence(std::size_t idx, const Word& w) const {
  const Word& p = periods_[idx];
  std::string text = cyclic_text(p, w.size());
  std::size_t pos = text.find(w.str());
  if (pos == std::string::npos || pos >= p.size()) return std::nullopt;
  return pos;
}

std::optional<PeriodicWitnessIndex::Hit> PeriodicWitnessIndex::find(const Word& w, const QuadSurd& t) const {
  if (w.size() != n_) throw DomainError("witness index length mismatch");
  auto it = first_.find(hash_digits(w.str()));
  if (it == first_.end()) return std::nullopt;
  SurdSum ts(t);
  std::size_t start = it->second;
  if (auto pos = occurrence(start, w); pos && value_of(start) <= ts)
    return Hit{periods_[start].rotated(*pos), value_of(start)};
  for (std::size_t idx = 0; idx < periods_.size(); ++idx) {
    if (idx == start) continue;
    auto pos = occurrence(idx, w);
    if (pos && value_of(idx) <= ts) return Hit{periods_[idx].rotated(*pos), value_of(idx)};
  }
  return std::nullopt;
}

namespace {

void check_threshold(const QuadSurd& t) {
  if (!t.is_rational() && t.radicand() != 3)
    throw DomainError("membership thresholds must be rational or sqrt(12)-like: " + t.to_string());
}

struct Node {
  std::string x;
  std::size_t left = 0;  // digits added on the left
};

// Child order: extend on the right at odd depths and on the left at even ones.
void expand(const Node& node, int depth, std::vector<Node>& out) {
  for (char d : {'1', '2'}) {
    Node c;
    if (depth % 2 == 1) {
      c.x = node.x + d;
      c.left = node.left;
    } else {
      c.x = std::string(1, d) + node.x;
      c.left = node.left + 1;
    }
    out.push_back(std::move(c));
  }
}

bool closing_depth(int depth) { return depth == 0 || depth == 2 || depth == 6 || depth == 12; }

std::optional<BiSeq> try_closings(const Node& node, const QuadSurd& t, const MarkovBudget& mb, SurdSum& value) {
  Word x = Word::raw(node.x);
  SurdSum ts(t);
  std::vector<BiSeq> candidates{BiSeq::periodic(x.rotated(node.left))};
  for (const char* l : {"22", "11"})
    for (const char* r : {"22", "11"})
      candidates.emplace_back(Word(l), x.substr(0, node.left), x.substr(node.left), Word(r));
  for (const auto& c : candidates) {
    try {
      MarkovValue mv = markov_value(c, mb);
      if (mv.value <= ts) {
        value = mv.value;
        return c;
      }
    } catch (const BudgetExceeded&) {
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipCertificate membership(const Word& w, const QuadSurd& t, const MembershipBudget& budget,
                                 const PeriodicWitnessIndex* index) {
  if (w.empty()) throw DomainError("membership of the empty word");
  check_threshold(t);
  MembershipCertificate cert;
  cert.word = w;
  cert.threshold = t;
  if (ExtensionBounds(w.str()).first_min_above(t) >= 0) {
    cert.verdict = Verdict::Out;
    cert.refutation_depth = 0;
    cert.nodes = 1;
    return cert;
  }
  std::unique_ptr<PeriodicWitnessIndex> local;
  if (!index) {
    std::size_t cap = budget.witness_period ? budget.witness_period : default_period_cap(w.size());
    local = std::make_unique<PeriodicWitnessIndex>(w.size(), cap);
    index = local.get();
  }
  if (auto hit = index->find(w, t)) {
    cert.verdict = Verdict::In;
    cert.witness = BiSeq::periodic(hit->period);
    cert.witness_value = hit->value;
    return cert;
  }
  bool above_three = t > QuadSurd(3);
  int max_depth = budget.refute_depth ? budget.refute_depth : 4 * static_cast<int>(w.size()) + 32;
  std::vector<Node> frontier{{w.str(), 0}};
  std::size_t nodes = 1;
  for (int depth = 0;; ++depth) {
    if (above_three && closing_depth(depth)) {
      std::size_t tries = std::min<std::size_t>(frontier.size(), 64);
      for (std::size_t k = 0; k < tries; ++k) {
        SurdSum value;
        if (auto wit = try_closings(frontier[k], t, budget.markov, value)) {
          cert.verdict = Verdict::In;
          cert.witness = *wit;
          cert.witness_value = value;
          cert.nodes = nodes;
          return cert;
        }
      }
    }
    if (depth >= max_depth || nodes > budget.node_limit) break;
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const auto& node : frontier) {
      std::vector<Node> kids;
      expand(node, depth + 1, kids);
      for (auto& k : kids)
        if (ExtensionBounds(k.x).first_min_above(t) < 0) next.push_back(std::move(k));
    }
    nodes += next.size();
    frontier = std::move(next);
    if (frontier.empty()) {
      cert.verdict = Verdict::Out;
      cert.refutation_depth = depth + 1;
      cert.nodes = nodes;
      return cert;
    }
  }
  cert.nodes = nodes;
  return cert;
}

namespace {

// Lower bound of lambda at position i of x over all extensions, via extremal_tail.
SurdSum slow_min(const Word& x, std::size_t i) {
  Word fwd = x.substr(i + 1), bwd = x.substr(0, i).reversed();
  QuadSurd f = extremal_tail(fwd, Extremum::Min).value;
  QuadSurd b = extremal_tail(bwd, Extremum::Min).value;
  return SurdSum(QuadSurd(x.value(i))) + SurdSum(f) + SurdSum(b);
}

bool slow_dead(const std::string& x, const QuadSurd& t) {
  Word w = Word::raw(x);
  SurdSum ts(t);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (slow_min(w, i) > ts) return true;
  return false;
}

}  // namespace

bool verify_certificate(const MembershipCertificate& c, const MarkovBudget& budget) {
  switch (c.verdict) {
    case Verdict::In: {
      if (!c.witness) return false;
      if (c.witness->window(0, c.word.size()) != c.word) return false;
      MarkovValue mv = markov_value(*c.witness, budget);
      if (c.witness_value && !(mv.value == *c.witness_value)) return false;
      return mv.value <= SurdSum(c.threshold);
    }
    case Verdict::Out: {
      std::vector<Node> frontier{{c.word.str(), 0}};
      for (int depth = 0; depth <= c.refutation_depth; ++depth) {
        std::vector<Node> alive;
        for (auto& node : frontier)
          if (!slow_dead(node.x, c.threshold)) alive.push_back(std::move(node));
        if (alive.empty()) return true;
        if (depth == c.refutation_depth) return false;
        frontier.clear();
        for (const auto& node : alive) expand(node, depth + 1, frontier);
      }
      return false;
    }
    default:
      return true;
  }
}

std::vector<Word> LanguageSet::words(Verdict v) const {
  std::vector<Word> out;
  for (const auto& [w, c] : entries)
    if (c.verdict == v) out.push_back(w);
  return out;
}

std::size_t LanguageSet::count(Verdict v) const {
  std::size_t k = 0;
  for (const auto& [w, c] : entries) k += c.verdict == v;
  return k;
}

LanguageSet sigma_enumerate(const QuadSurd& t, int n, const MembershipBudget& budget, int workers) {
  if (n < 1) throw DomainError("sigma_enumerate: n must be positive");
  check_threshold(t);
  workers = std::max(1, workers);
  std::set<std::string> alive;  // In or Unresolved at the previous level
  LanguageSet result;
  result.n = n;
  result.t = t;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::string> cand;
    if (k == 1) {
      cand = {"1", "2"};
    } else {
      for (const auto& s : alive)
        for (char d : {'1', '2'}) {
          std::string c = s + d;
          if (alive.count(c.substr(1))) cand.push_back(std::move(c));
        }
    }
    std::size_t cap = budget.witness_period ? budget.witness_period : default_period_cap(static_cast<std::size_t>(k));
    PeriodicWitnessIndex index(static_cast<std::size_t>(k), cap);
    std::vector<MembershipCertificate> certs(cand.size());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto run = [&](int id) {
      try {
        for (std::size_t i = static_cast<std::size_t>(id); i < cand.size(); i += static_cast<std::size_t>(workers))
          certs[i] = membership(Word::raw(cand[i]), t, budget, &index);
      } catch (...) {
        errors[static_cast<std::size_t>(id)] = std::current_exception();
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (int id = 0; id < workers; ++id) pool.emplace_back(run, id);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    alive.clear();
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (certs[i].verdict != Verdict::Out) alive.insert(cand[i]);
    if (k == n)
      for (auto& c : certs) result.entries.emplace(c.word, std::move(c));
  }
  return result;
}

namespace {

// Factor -> rotation of the first period (in index order) containing it.
std::map<std::string, Word> factor_set(int n, int letters) {
  std::map<std::string, Word> out;
  for (const auto& p : christoffel_periods(2 * static_cast<std::size_t>(letters))) {
    std::string text = cyclic_text(p, static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < p.size(); ++s) out.try_emplace(text.substr(s, static_cast<std::size_t>(n)), p.rotated(s));
  }
  return out;
}

bool same_keys(const std::map<std::string, Word>& x, const std::map<std::string, Word>& y) {
  if (x.size() != y.size()) return false;
  for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
    if (i->first != j->first) return false;
  return true;
}

}  // namespace

LanguageSet sigma3_factors(int n) {
  if (n < 1) throw DomainError("sigma3_factors: n must be positive");
  int letters = n / 2 + 2;
  std::map<std::string, Word> prev = factor_set(n, letters);
  for (;;) {
    letters *= 2;
    std::map<std::string, Word> cur = factor_set(n, letters);
    if (same_keys(cur, prev)) break;
    prev = std::move(cur);
  }
  LanguageSet out;
  out.n = n;
  out.t = QuadSurd(3);
  for (const auto& [s, period] : prev) {
    MembershipCertificate c;
    c.word = Word::raw(s);
    c.witness = BiSeq::periodic(period);
    c.threshold = QuadSurd(3);
    c.verdict = Verdict::In;
    out.entries.emplace(c.word, std::move(c));
  }
  return out;
}

}  // namespace spectra
