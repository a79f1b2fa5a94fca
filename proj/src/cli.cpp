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

#include "spectra/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/ab_words.hpp"
#include "spectra/biseq.hpp"
#include "spectra/connect.hpp"
#include "spectra/cuts.hpp"
#include "spectra/dimension.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"
#include "spectra/language.hpp"
#include "spectra/patterns.hpp"
#include "spectra/renorm.hpp"
#include "spectra/serialize.hpp"
#include "spectra/suite.hpp"
#include "spectra/threshold.hpp"

namespace spectra {

namespace {

constexpr const char* kSeqHelp =
    "Sequence literal:\n"
    "  seq  := \"per(\" P \")\" | \"l:per(\" P \")\" [ \"mid(\" M \")\" ] \"r:per(\" Q \")\"\n"
    "  M    := digits | digits \"|\" digits\n"
    "Digits are 1 and 2; letters a, b stand for 22, 11. Position 0 is the first\n"
    "digit right of the bar, or the first digit of M when M has no bar.";

constexpr const char* kThresholdHelp =
    "Threshold: decimal | p/q | sqrt(k) | c+b^-e | c-b^-e, where e may be kn\n"
    "(scaled by --n or by each value of --n-range), e.g. 3+6^-3n.";

constexpr const char* kRhoHelp = "rho: b^-e | e^-x | decimal, e.g. 6^-18, 6^-3n, e^-100, 0.001.";

// Options shared by all subcommands.
struct RunConfig {
  std::string format = "json";
  int workers = 1;
  std::uint64_t seed = 20260101;
  bool verify = false;
  bool timing = false;
  std::size_t node_limit = 0;  // 0: the subcommand default
  int refute_depth = 0;
  int max_doublings = 14;
};

// Result of one subcommand run.
struct Outcome {
  Json doc;
  int code = kExitOk;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

MarkovBudget markov_budget(const RunConfig& c) { return MarkovBudget{c.max_doublings}; }

MembershipBudget membership_budget(const RunConfig& c, std::size_t default_nodes) {
  MembershipBudget b;
  b.node_limit = c.node_limit ? c.node_limit : default_nodes;
  b.refute_depth = c.refute_depth;
  b.markov = markov_budget(c);
  return b;
}

Word parse_word(const std::string& text) { return Word(expand_letters(text)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "a:b" inclusive.
std::pair<long, long> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("range must look like a:b: " + s);
  long a = std::stol(s.substr(0, colon)), b = std::stol(s.substr(colon + 1));
  if (a > b) throw ParseError("empty range: " + s);
  return {a, b};
}

void mark_verified(Outcome& o, bool ok, const std::string& what) {
  o.doc["verified"] = ok;
  if (!ok) {
    o.doc["verify_failure"] = what;
    o.code = kExitDomain;
  }
}

// Independent check of a Good cut: maxima of lambda from extremal tails.
bool good_by_tails(const Cut& c) {
  Word x = c.context();
  for (std::size_t i : {c.bar(), c.bar() + 1}) {
    QuadSurd fwd = QuadSurd(x.value(i)) + extremal_tail(x.substr(i + 1), Extremum::Max).value;
    QuadSurd bwd = extremal_tail(x.substr(0, i).reversed(), Extremum::Max).value;
    if (!(SurdSum(fwd) + SurdSum(bwd) < SurdSum(3))) return false;
  }
  return true;
}

// ---- subcommands ----

Outcome run_eval(const RunConfig& cfg, const std::string& seq, std::optional<long> at) {
  BiSeq s = BiSeq::parse(seq);
  Outcome o;
  o.doc["sequence"] = s.to_string();
  MarkovValue v = markov_value(s, markov_budget(cfg));
  o.doc["markov_value"] = to_json(v);
  if (at) o.doc["lambda"] = Json{{"position", *at}, {"value", exact_json(lambda_at(s, *at))}};
  if (cfg.verify) {
    bool ok = markov_value(s.transpose(), markov_budget(cfg)).value == v.value;
    if (v.witness_index) ok = ok && lambda_at(s, *v.witness_index) == v.value;
    mark_verified(o, ok, "transposed value or attained position disagrees");
  }
  return o;
}

Outcome run_interval(const RunConfig& cfg, const std::string& word) {
  Word w = parse_word(word);
  Cylinder c = cylinder(w);
  Outcome o;
  o.doc = to_json(c);
  if (cfg.verify) {
    Continuants k = continuants(w);
    Rational len(Integer(1), Integer(k.q * (k.q + k.q_prev)));
    len.canonicalize();
    mark_verified(o, len == c.length && c.hi - c.lo == c.length, "length differs from 1/(q(q+q'))");
  }
  return o;
}

Outcome run_alphabets(const RunConfig& cfg, std::optional<int> depth, const std::string& word, std::optional<int> n) {
  Outcome o;
  if (!word.empty()) {
    if (!n) throw ParseError("--word needs --n");
    AlphabetResult r = find_alphabet(parse_word(word), *n);
    o.doc["extension"] = r.extension.word.str();
    o.doc["extended_left"] = r.extension.left;
    o.doc["extended_right"] = r.extension.right;
    o.doc["decomposition"] = to_json(r.decomposition);
    if (cfg.verify) {
      const auto& a = r.decomposition.alphabet;
      bool ok = to_digits(r.decomposition.reassemble()) == r.extension.word &&
                alphabet_from_witness(a.witness) == a;
      mark_verified(o, ok, "reassembly or witness mismatch");
    }
    return o;
  }
  Json rows = Json::array();
  bool ok = true;
  for (const auto& a : enumerate_alphabets(depth.value_or(3))) {
    rows.push_back(to_json(a));
    if (cfg.verify) ok = ok && alphabet_from_pair(a.alpha, a.beta) == a;
  }
  o.doc["rows"] = std::move(rows);
  if (cfg.verify) mark_verified(o, ok, "witness recovery mismatch");
  return o;
}

Outcome run_farey(const RunConfig& cfg, std::optional<int> n, const std::string& theta_text, const std::string& word) {
  Outcome o;
  if (!theta_text.empty()) {
    Rational x = parse_rational(theta_text);
    ABWord w = theta_inverse(x);
    o.doc = Json{{"theta", to_string(x)}, {"word", w.str()}, {"digits", to_digits(w).str()}};
    if (cfg.verify) mark_verified(o, theta(w) == x, "theta round trip");
    return o;
  }
  if (!word.empty()) {
    ABWord w(word);
    o.doc = Json{{"word", w.str()}, {"theta", to_string(theta(w))}};
    return o;
  }
  if (!n) throw ParseError("farey needs --n, --theta or --word");
  std::vector<ABWord> fw = farey_words(*n);
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < fw.size(); ++i) {
    rows.push_back(Json{{"index", i}, {"word", fw[i].str()}, {"theta", to_string(theta(fw[i]))}});
    if (cfg.verify && i + 1 < fw.size()) {
      try {
        alphabet_from_pair(fw[i], fw[i + 1]);
      } catch (const DomainError&) {
        ok = false;
      }
    }
  }
  o.doc["n"] = *n;
  o.doc["count"] = fw.size();
  o.doc["rows"] = std::move(rows);
  if (cfg.verify) mark_verified(o, ok, "adjacent words are not an ordered alphabet");
  return o;
}

Outcome run_renorm(const RunConfig& cfg, const std::string& word, std::optional<int> n, const std::string& alpha,
                   const std::string& beta, bool step) {
  Outcome o;
  Word w = parse_word(word);
  WeakRenormalization r;
  if (!alpha.empty() || !beta.empty()) {
    r = semi_renormalize(w, alphabet_from_pair(ABWord(alpha), ABWord(beta)));
  } else if (step) {
    r = renorm_step(trivial_decomposition(from_digits(ab_extension(w).word)));
  } else if (n) {
    r = find_alphabet(w, *n).decomposition;
  } else {
    throw ParseError("renorm needs --n, --step or --alpha/--beta");
  }
  o.doc = to_json(r);
  o.doc["kernel"] = r.kernel().str();
  if (cfg.verify) {
    bool ok = true;
    try {
      check_invariants(r);
    } catch (const NotRenormalizable&) {
      ok = false;
    }
    mark_verified(o, ok, "decomposition invariants fail");
  }
  return o;
}

Outcome run_sigma(const RunConfig& cfg, const std::string& t_text, std::optional<int> n, const std::string& word) {
  Outcome o;
  MembershipBudget budget = membership_budget(cfg, 1'000'000);
  if (!word.empty()) {
    Word w = parse_word(word);
    QuadSurd t = parse_threshold(t_text, static_cast<long>(w.size()));
    MembershipCertificate c = membership(w, t, budget);
    o.doc = to_json(c);
    if (c.verdict == Verdict::Unresolved) o.code = kExitBudget;
    if (cfg.verify && c.verdict != Verdict::Unresolved)
      mark_verified(o, verify_certificate(c, budget.markov), "certificate re-check failed");
    return o;
  }
  if (!n) throw ParseError("sigma needs --n or --word");
  QuadSurd t = parse_threshold(t_text, *n);
  LanguageSet s = sigma_enumerate(t, *n, budget, cfg.workers);
  o.doc = to_json(s);
  if (s.count(Verdict::Unresolved)) o.code = kExitBudget;
  if (cfg.verify) {
    bool ok = true;
    for (const auto& [w, c] : s.entries)
      if (c.verdict != Verdict::Unresolved && !verify_certificate(c, budget.markov)) ok = false;
    mark_verified(o, ok, "some certificate failed its re-check");
  }
  return o;
}

Outcome run_cuts(const RunConfig& cfg, const std::string& cut, int depth, const std::string& scan, const std::string& alpha,
                 const std::string& beta, std::optional<int> n) {
  Outcome o;
  if (!scan.empty()) {
    if (!n) throw ParseError("--scan needs --n");
    OrderedAlphabet a = alphabet_from_pair(ABWord(alpha.empty() ? "a" : alpha), ABWord(beta.empty() ? "b" : beta));
    PatternReport rep = forbidden_pattern_check(parse_word(scan), a, *n, cfg.verify, membership_budget(cfg, 200'000));
    o.doc = to_json(rep);
    for (const auto& h : rep.hits)
      if (h.verified && *h.verified == Verdict::Unresolved) o.code = kExitBudget;
    return o;
  }
  if (cut.empty()) throw ParseError("cuts needs --cut or --scan");
  Cut c = Cut::parse(cut);
  CutBudget budget;
  budget.max_depth = depth;
  if (cfg.node_limit) budget.node_limit = cfg.node_limit;
  CutClass k = classify_cut(c, budget);
  o.doc["cut"] = c.to_string();
  o.doc["class"] = to_json(k);
  if (k.kind == CutKind::Unresolved) o.code = kExitBudget;
  if (cfg.verify) {
    if (k.kind == CutKind::Good) {
      mark_verified(o, good_by_tails(c), "extremal tails disagree with Good");
    } else if (k.kind == CutKind::Bad) {
      // A bad cut keeps its context out of Sigma(3).
      Verdict v = membership(c.context(), QuadSurd(3), membership_budget(cfg, 1'000'000)).verdict;
      mark_verified(o, v == Verdict::Out, "context is not refuted at t = 3");
    } else {
      o.doc["verified"] = nullptr;
    }
  }
  return o;
}

Outcome run_pushcut(const RunConfig& cfg, const std::string& cut, const std::string& kind, const std::string& W,
                    const std::string& X, const std::string& R, const std::string& Y) {
  Outcome o;
  UVWord sub(W);
  if (!R.empty()) {
    ControlReport r = check_control(ABWord(X), ABWord(R), ABWord(Y), sub);
    o.doc = to_json(r);
    if (!r.conclusion) o.code = kExitDomain;
    return o;
  }
  if (cut.empty() || kind.empty()) throw ParseError("pushcut needs --cut and --kind, or --X/--R/--Y");
  Cut c = Cut::parse(cut);
  PushKind pk = parse_push_kind(kind);
  Cut img = push_cut(sub, c, pk);
  CutTemplate tpl = match_template(c, pk);
  o.doc = Json{{"kind", to_string(pk)},
               {"W", sub.str()},
               {"template", {{"X", tpl.X.str()}, {"w", tpl.w.str()}, {"Y", tpl.Y.str()}}},
               {"image", img.to_string()}};
  if (cfg.verify) {
    CutKind before = classify_cut(c).kind, after = classify_cut(img).kind;
    o.doc["base_class"] = to_string(before);
    o.doc["image_class"] = to_string(after);
    mark_verified(o, before == after && before != CutKind::Unresolved, "classification changed under the push");
  }
  return o;
}

Outcome run_compare(const RunConfig& cfg, const std::string& omega, int x, int y, const std::string& ext,
                    const std::string& t_text, const std::string& witness) {
  std::optional<BiSeq> w;
  if (!witness.empty()) w = BiSeq::parse(witness);
  BadCutComparison r = compare_bad_cuts(parse_word(omega), x, y, parse_word(ext), parse_threshold(t_text), w,
                                        membership_budget(cfg, 1'000'000));
  Outcome o;
  o.doc = to_json(r);
  if (cfg.verify) mark_verified(o, r.witness_value >= r.base_lambda, "witness value below its own lambda");
  return o;
}

Outcome run_connect(const RunConfig& cfg, const std::string& kind, int n, const std::string& alpha, const std::string& beta) {
  ConnectKind k = parse_connect_kind(kind);
  std::optional<OrderedAlphabet> a;
  if (!alpha.empty() || !beta.empty()) a = alphabet_from_pair(ABWord(alpha), ABWord(beta));
  BiSeq s = connecting_sequence(k, n, a);
  MarkovValue v = markov_value(s, markov_budget(cfg));
  Outcome o;
  o.doc = Json{{"kind", to_string(k)}, {"n", n}, {"sequence", s.to_string()}, {"markov_value", to_json(v)}};
  if (cfg.verify) mark_verified(o, markov_value(s.transpose(), markov_budget(cfg)).value == v.value, "transpose changes m");
  return o;
}

std::vector<Word> block_words(const std::vector<Word>& blocks, int power) {
  std::vector<Word> out{Word()};
  for (int i = 0; i < power; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (const auto& b : blocks) next.push_back(w + b);
    out = std::move(next);
  }
  return out;
}

Outcome run_dim(const RunConfig& cfg, const std::string& blocks_text, int power, const std::string& t_text,
                std::optional<int> m, const std::string& range, bool certify, const std::string& mode_text) {
  Outcome o;
  BracketMode mode = parse_bracket_mode(mode_text);
  auto elapsed = [&](const Stopwatch& sw) { return cfg.timing ? std::optional<double>(sw.seconds()) : std::nullopt; };
  if (!blocks_text.empty()) {
    std::vector<Word> blocks;
    for (const auto& b : split(blocks_text, ',')) blocks.push_back(parse_word(b));
    Stopwatch sw;
    if (certify) {
      BlockCertificate c = certify_blocks(blocks, parse_threshold(t_text));
      o.doc = to_json(c);
      if (cfg.timing) o.doc["elapsed"] = sw.seconds();
      if (cfg.verify) {
        bool ok = true;
        for (const auto& b : blocks) ok = ok && markov_value(BiSeq::periodic(b), markov_budget(cfg)).value <= c.sup;
        mark_verified(o, ok, "a periodic block sequence exceeds the certified sup");
      }
      return o;
    }
    DimBracket br = moran_bracket(block_words(blocks, power), mode, cfg.workers);
    o.doc = to_json(br, elapsed(sw));
    if (cfg.verify) {
      DimBracket again = moran_bracket(block_words(blocks, power), mode, 1);
      mark_verified(o, again.lower == br.lower && again.upper == br.upper && br.lower <= br.upper,
                    "serial recomputation differs");
    }
    return o;
  }
  if (t_text.empty() || !m) throw ParseError("dim needs --blocks, or --t with --m");
  MembershipBudget budget = membership_budget(cfg, 500);
  auto one = [&](std::optional<long> n) {
    Stopwatch sw;
    DUpper d = d_upper(parse_threshold(t_text, n), *m, budget, cfg.workers, mode);
    Json j = to_json(d, elapsed(sw));
    if (d.unresolved) o.code = kExitBudget;
    return j;
  };
  if (range.empty()) {
    o.doc = one(std::nullopt);
    o.doc["t"] = t_text;
    o.doc["m"] = *m;
    return o;
  }
  auto [a, b] = parse_range(range);
  Json rows = Json::array();
  for (long n = a; n <= b; ++n) {
    Json j = one(n);
    Json row{{"n", n}, {"t", exact_json(parse_threshold(t_text, n))}, {"m", *m}, {"value", j["value"]},
             {"lower", j["bracket"]["lower"]}, {"upper", j["bracket"]["upper"]}, {"count", j["bracket"]["count"]},
             {"unresolved", j["unresolved"]}};
    if (cfg.timing) row["elapsed"] = j["elapsed"];
    rows.push_back(std::move(row));
  }
  o.doc["rows"] = std::move(rows);
  return o;
}

// Rows over a rho grid, or a single document.
template <class F>
Outcome rho_table(const std::string& rho, const std::string& range, F&& f) {
  Outcome o;
  if (range.empty()) {
    o.doc = f(parse_log_rho(rho));
    return o;
  }
  auto [a, b] = parse_range(range);
  Json rows = Json::array();
  for (long n = a; n <= b; ++n) {
    Json row{{"n", n}};
    row.update(f(parse_log_rho(rho, n)));
    rows.push_back(std::move(row));
  }
  o.doc["rows"] = std::move(rows);
  return o;
}

Outcome run_asym(const RunConfig& cfg, const std::string& rho, const std::string& range) {
  bool bad = false;
  Outcome o = rho_table(rho, range, [&](double L) {
    double d = d_asymptotic_log(L);
    Json j{{"log_rho", -L}, {"d_asymptotic", d}, {"c0", asym_c0()}, {"shape", d * L / std::log(L)}};
    if (cfg.verify) {
      double w = lambert_inv(std::exp(asym_c0()) * L);
      if (std::abs(d * L / 2 - w) > 1e-12 * std::max(1.0, w)) bad = true;
    }
    return j;
  });
  if (cfg.verify) mark_verified(o, !bad, "d L / 2 differs from the Lambert inverse");
  return o;
}

Outcome run_bound(const RunConfig&, const std::string& rho, double C, const std::string& range) {
  return rho_table(rho, range, [&](double L) {
    return Json{{"log_rho", -L}, {"C", C}, {"bound", thm2_bound_log(L, C)}, {"d_asymptotic_half", d_asymptotic_log(L) / 2}};
  });
}

Outcome run_suite(const RunConfig& cfg, bool quick, const std::string& only, std::ostream& err) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.workers = cfg.workers;
  sc.full = !quick;
  for (const auto& s : split(only, ',')) sc.only.push_back(std::stoi(s));
  Outcome o;
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(sc, [&](const CriterionResult& r) { err << format_result(r) << "\n"; })) {
    Json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (cfg.timing) row["seconds"] = r.seconds;
    rows.push_back(std::move(row));
    all = all && r.pass;
  }
  o.doc["pass"] = all;
  o.doc["rows"] = std::move(rows);
  if (!all) o.code = kExitDomain;
  return o;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for the Markov and Lagrange spectra near 3."};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--workers", cfg.workers, "worker threads (SPECTRA_WORKERS overrides)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_flag("--verify", cfg.verify, "re-check results through independent code paths");
  app.add_flag("--timing", cfg.timing, "include elapsed seconds (output then varies between runs)");
  app.add_option("--node-limit", cfg.node_limit, "search node budget")->check(CLI::PositiveNumber);
  app.add_option("--refute-depth", cfg.refute_depth, "membership refutation depth in digits")->check(CLI::NonNegativeNumber);
  app.add_option("--max-doublings", cfg.max_doublings, "Markov value window doublings")->check(CLI::PositiveNumber);

  std::string seq, word, t_text, theta_text, cut, scan, alpha, beta, kind, W, X, R, Y, omega, ext, witness, blocks,
      range, rho, only, mode = "chain-rule";
  std::optional<long> at;
  std::optional<int> n, depth, m;
  int x = 1, y = 2, power = 1, cut_depth = 48;
  double C = 0;
  bool step = false, certify = false, quick = false;

  auto* eval = app.add_subcommand("eval", "Markov value of an eventually periodic sequence");
  eval->footer(kSeqHelp);
  eval->add_option("--seq", seq, "sequence literal")->required();
  eval->add_option("--at", at, "also report lambda at this position");

  auto* interval = app.add_subcommand("interval", "cylinder I(w), its length and r(w)");
  interval->add_option("--word", word, "digit word (a, b allowed)")->required();

  auto* alphabets = app.add_subcommand("alphabets", "alphabet tree, or the scale-n alphabet of a word");
  alphabets->add_option("--depth", depth, "list the tree to this depth");
  alphabets->add_option("--word", word, "digit word");
  alphabets->add_option("--n", n, "scale for --word");

  auto* farey = app.add_subcommand("farey", "Farey words F_n and the theta bijection");
  farey->add_option("--n", n, "order");
  farey->add_option("--theta", theta_text, "word with this proportion of b");
  farey->add_option("--word", word, "theta of an {a,b} word");

  auto* renorm = app.add_subcommand("renorm", "weak and semi renormalization");
  renorm->add_option("--word", word, "digit word")->required();
  renorm->add_option("--n", n, "run the chain until |alpha beta| >= n");
  renorm->add_flag("--step", step, "one step from the trivial decomposition");
  renorm->add_option("--alpha", alpha, "alphabet letter alpha over {a,b}");
  renorm->add_option("--beta", beta, "alphabet letter beta over {a,b}");

  auto* sigma = app.add_subcommand("sigma", "membership in Sigma(t, n) and enumeration");
  sigma->footer(kThresholdHelp);
  sigma->add_option("--t", t_text, "threshold")->required();
  sigma->add_option("--n", n, "word length to enumerate");
  sigma->add_option("--word", word, "decide a single word");

  auto* cuts = app.add_subcommand("cuts", "classify a cut, or scan a word for forbidden factors");
  cuts->add_option("--cut", cut, "cut such as 2211|2211 or ab|ab");
  cuts->add_option("--depth", cut_depth, "extension depth budget");
  cuts->add_option("--scan", scan, "digit word to scan");
  cuts->add_option("--alpha", alpha, "alphabet for --scan (default a)");
  cuts->add_option("--beta", beta, "alphabet for --scan (default b)");
  cuts->add_option("--n", n, "scale for --scan");

  auto* pushcut = app.add_subcommand("pushcut", "push a cut through a substitution, or check control of X R Y");
  pushcut->add_option("--cut", cut, "template cut over {a,b}");
  pushcut->add_option("--kind", kind, "good-symmetric | good-asymmetric | bad-symmetric | bad-asymmetric");
  pushcut->add_option("--W", W, "substitution word over {U,V}");
  pushcut->add_option("--X", X, "control: left word");
  pushcut->add_option("--R", R, "control: middle word");
  pushcut->add_option("--Y", Y, "control: right word");
  pushcut->add_option("--omega", omega, "compare: base word");
  pushcut->add_option("--x", x, "compare: digit left of the base");
  pushcut->add_option("--y", y, "compare: digit right of the base");
  pushcut->add_option("--extended", ext, "compare: extension of omega");
  pushcut->add_option("--t", t_text, "compare: threshold above 3");
  pushcut->add_option("--witness", witness, "compare: sequence containing the base cut");

  auto* connect = app.add_subcommand("connect", "Farey connecting sequences");
  connect->add_option("--kind", kind, "ab | ba | a-to-ab | ab-to-b")->required();
  connect->add_option("--n", n, "order")->required();
  connect->add_option("--alpha", alpha, "alphabet alpha for the a-to-ab and ab-to-b kinds");
  connect->add_option("--beta", beta, "alphabet beta");

  auto* dim = app.add_subcommand("dim", "dimension brackets, d(t) upper bounds and block certificates");
  dim->footer(kThresholdHelp);
  dim->add_option("--blocks", blocks, "comma separated blocks of one length");
  dim->add_option("--power", power, "bracket the k-fold block concatenations")->check(CLI::PositiveNumber);
  dim->add_flag("--certify", certify, "certify sup lambda <= t over free block sequences");
  dim->add_option("--t", t_text, "threshold");
  dim->add_option("--m", m, "cover level for the d(t) upper bound");
  dim->add_option("--n-range", range, "a:b sweep of n for thresholds using n");
  dim->add_option("--mode", mode, "chain-rule | quasi-multiplicative");

  auto* asym = app.add_subcommand("asym", "main term of d(3 + rho)");
  asym->footer(kRhoHelp);
  asym->add_option("--rho", rho, "rho")->required();
  asym->add_option("--n-range", range, "a:b sweep of n for rho using n");

  auto* bound = app.add_subcommand("bound", "upper bound shape for the difference set dimension");
  bound->footer(kRhoHelp);
  bound->add_option("--rho", rho, "rho")->required();
  bound->add_option("--C", C, "additive constant");
  bound->add_option("--n-range", range, "a:b sweep of n for rho using n");

  auto* suite = app.add_subcommand("verify-suite", "run the acceptance criteria");
  suite->add_flag("--quick", quick, "sampled gate only for the n = 68 check");
  suite->add_option("--only", only, "comma separated criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (const char* env = std::getenv("SPECTRA_WORKERS")) {
    try {
      cfg.workers = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      err << "usage error: SPECTRA_WORKERS must be a positive integer\n";
      return kExitUsage;
    }
  }

  try {
    Outcome o;
    if (*eval) o = run_eval(cfg, seq, at);
    else if (*interval) o = run_interval(cfg, word);
    else if (*alphabets) o = run_alphabets(cfg, depth, word, n);
    else if (*farey) o = run_farey(cfg, n, theta_text, word);
    else if (*renorm) o = run_renorm(cfg, word, n, alpha, beta, step);
    else if (*sigma) o = run_sigma(cfg, t_text, n, word);
    else if (*cuts) o = run_cuts(cfg, cut, cut_depth, scan, alpha, beta, n);
    else if (*pushcut && !omega.empty()) o = run_compare(cfg, omega, x, y, ext.empty() ? omega : ext, t_text, witness);
    else if (*pushcut) o = run_pushcut(cfg, cut, kind, W, X, R, Y);
    else if (*connect) o = run_connect(cfg, kind, *n, alpha, beta);
    else if (*dim) o = run_dim(cfg, blocks, power, t_text, m, range, certify, mode);
    else if (*asym) o = run_asym(cfg, rho, range);
    else if (*bound) o = run_bound(cfg, rho, C, range);
    else if (*suite) o = run_suite(cfg, quick, only, err);
    render(out, o.doc, parse_format(cfg.format));
    return o.code;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace spectra
