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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectra/ab_words.hpp"
#include "spectra/biseq.hpp"
#include "spectra/surd.hpp"

namespace spectra {

enum class Verdict { In, Out, Unresolved };
std::string to_string(Verdict v);

struct MembershipBudget {
  int refute_depth = 0;               // extension digits, both sides together; 0 = 4n + 32
  std::size_t node_limit = 1'000'000; // live nodes summed over all depths
  std::size_t witness_period = 0;     // digit length cap for periodic witnesses; 0 = 4n + 16
  MarkovBudget markov;
};

struct MembershipCertificate {
  Word word;
  QuadSurd threshold;
  Verdict verdict = Verdict::Unresolved;
  // In: the word sits at position 0 of the witness.
  std::optional<BiSeq> witness;
  std::optional<SurdSum> witness_value;
  // Out: every extension with this many added digits has a position whose
  // lambda lower bound exceeds the threshold.
  int refutation_depth = -1;
  std::size_t nodes = 0;
};

// Periods of c(A) and the two constant periods, ordered by digit length and
// then by theta; used to look up periodic witnesses for words of one length.
class PeriodicWitnessIndex {
 public:
  PeriodicWitnessIndex(std::size_t word_length, std::size_t max_period_digits);

  struct Hit {
    Word period;  // rotated so the word starts at position 0
    SurdSum value;
  };
  // Canonical witness: the first period (in index order) containing w whose
  // Markov value is at most t.
  std::optional<Hit> find(const Word& w, const QuadSurd& t) const;

  std::size_t word_length() const { return n_; }
  std::size_t period_count() const { return periods_.size(); }

 private:
  const SurdSum& value_of(std::size_t idx) const;
  std::optional<std::size_t> occurrence(std::size_t idx, const Word& w) const;

  std::size_t n_;
  std::vector<Word> periods_;
  std::unordered_map<std::uint64_t, std::uint32_t> first_;  // window hash -> period index
  mutable std::mutex mu_;
  mutable std::map<std::size_t, SurdSum> values_;
};

// Membership of w in Sigma(t, |w|). The index, when given, must match |w|.
MembershipCertificate membership(const Word& w, const QuadSurd& t, const MembershipBudget& budget = {},
                                 const PeriodicWitnessIndex* index = nullptr);

// Re-checks a certificate through independent code paths: In witnesses by
// markov_value and digit comparison, Out refutations by re-running the
// extension search with bounds taken from extremal_tail.
bool verify_certificate(const MembershipCertificate& c, const MarkovBudget& budget = {});

struct LanguageSet {
  int n = 0;
  QuadSurd t;
  std::map<Word, MembershipCertificate> entries;  // every candidate examined at length n

  std::vector<Word> words(Verdict v = Verdict::In) const;
  std::size_t count(Verdict v) const;
};

// Level-by-level enumeration: length-k candidates are extensions of
// surviving length-(k-1) words whose last k-1 digits also survived.
LanguageSet sigma_enumerate(const QuadSurd& t, int n, const MembershipBudget& budget = {}, int workers = 1);

// Length-n factors of per(p) for p in c(A) and per(a), per(b).
LanguageSet sigma3_factors(int n);

}  // namespace spectra
