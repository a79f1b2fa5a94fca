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

#include "spectra/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <thread>

#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"

namespace spectra {

std::string to_string(BracketMode m) {
  return m == BracketMode::ChainRule ? "chain-rule" : "quasi-multiplicative";
}

BracketMode parse_bracket_mode(std::string_view text) {
  if (text == "chain-rule") return BracketMode::ChainRule;
  if (text == "quasi-multiplicative") return BracketMode::QuasiMultiplicative;
  throw ParseError("unknown bracket mode: " + std::string(text));
}

namespace {

constexpr mpfr_prec_t kPrec = 96;
constexpr int kBisectSteps = 30;

// RAII wrapper for one MPFR variable.
struct Mp {
  mpfr_t v;
  Mp() { mpfr_init2(v, kPrec); }
  ~Mp() { mpfr_clear(v); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

// Per-word bases b_w so that the pressure sum is sum_w b_w^(-e s), with the
// base rounded so that the sum errs in the requested direction.
struct Bases {
  std::vector<Mp> up;    // bases for the sum rounded up (smaller bases)
  std::vector<Mp> down;  // bases for the sum rounded down
  double exponent = 1;   // e
  bool shift = false;    // multiply by 2^s (upper) and 2^-s (lower)
  explicit Bases(std::size_t n) : up(n), down(n) {}
};

void set_z(mpfr_t x, const Integer& z, mpfr_rnd_t r) { mpfr_set_z(x, z.get_mpz_t(), r); }

// (sqrt3 - 1)/2 rounded down and sqrt3 - 1 rounded up.
void tail_range(mpfr_t lo, mpfr_t hi) {
  mpfr_sqrt_ui(lo, 3, MPFR_RNDD);
  mpfr_sub_ui(lo, lo, 1, MPFR_RNDD);
  mpfr_div_ui(lo, lo, 2, MPFR_RNDD);
  mpfr_sqrt_ui(hi, 3, MPFR_RNDU);
  mpfr_sub_ui(hi, hi, 1, MPFR_RNDU);
}

// q + q' y with directed rounding.
void affine(mpfr_t out, const Continuants& c, const mpfr_t y, mpfr_rnd_t r) {
  Mp t;
  set_z(t.v, c.q_prev, r);
  mpfr_mul(t.v, t.v, y, r);
  set_z(out, c.q, r);
  mpfr_add(out, out, t.v, r);
}

Bases make_bases(const std::vector<Word>& words, BracketMode mode) {
  Bases b(words.size());
  Mp ylo, yhi;
  tail_range(ylo.v, yhi.v);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Continuants c = continuants(words[i]);
    if (mode == BracketMode::ChainRule) {
      affine(b.up[i].v, c, ylo.v, MPFR_RNDD);
      affine(b.down[i].v, c, yhi.v, MPFR_RNDU);
    } else {
      Integer inv = c.q * (c.q + c.q_prev);  // 1 / |I(w)|, exact
      set_z(b.up[i].v, inv, MPFR_RNDD);
      set_z(b.down[i].v, inv, MPFR_RNDU);
    }
  }
  b.exponent = mode == BracketMode::ChainRule ? 2.0 : 1.0;
  b.shift = mode == BracketMode::QuasiMultiplicative;
  return b;
}

// Sum over [from, to) of base^(-e s), rounded in direction r.
void partial_sum(mpfr_t out, const std::vector<Mp>& bases, std::size_t from, std::size_t to, double es,
                 mpfr_rnd_t r) {
  Mp e, t;
  mpfr_set_d(e.v, -es, MPFR_RNDN);  // exact: es is a dyadic double
  mpfr_set_zero(out, 1);
  for (std::size_t i = from; i < to; ++i) {
    mpfr_pow(t.v, bases[i].v, e.v, r);
    mpfr_add(out, out, t.v, r);
  }
}

// Pressure sum at s, rounded up (upper = true) or down, compared with 1.
// Returns sign(sum - 1) of the rounded value.
int pressure_vs_one(const Bases& b, double s, bool upper, int workers) {
  const auto& bases = upper ? b.up : b.down;
  mpfr_rnd_t r = upper ? MPFR_RNDU : MPFR_RNDD;
  std::size_t n = bases.size();
  std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  w = std::min(w, std::max<std::size_t>(1, n / 256));
  std::vector<Mp> parts(w);
  auto run = [&](std::size_t k) {
    partial_sum(parts[k].v, bases, n * k / w, n * (k + 1) / w, b.exponent * s, r);
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < w; ++k) pool.emplace_back(run, k);
    for (auto& th : pool) th.join();
  }
  Mp total;
  mpfr_set_zero(total.v, 1);
  for (auto& p : parts) mpfr_add(total.v, total.v, p.v, r);
  if (b.shift) {
    Mp f, e;
    mpfr_set_d(e.v, upper ? s : -s, MPFR_RNDN);
    mpfr_ui_pow(f.v, 2, e.v, r);
    mpfr_mul(total.v, total.v, f.v, r);
  }
  return mpfr_cmp_ui(total.v, 1);
}

}  // namespace

DimBracket moran_bracket(const std::vector<Word>& words, BracketMode mode, int workers) {
  if (words.empty()) throw EmptyLanguage("no words to bracket");
  std::size_t m = words.front().size();
  for (const auto& w : words)
    if (w.size() != m || m == 0) throw DomainError("bracket words must share one positive length");
  Bases b = make_bases(words, mode);
  DimBracket out;
  out.level = static_cast<int>(m);
  out.word_count = words.size();
  out.mode = mode;

  // Upper: smallest certified s with rounded-up pressure <= 1.
  if (pressure_vs_one(b, 0.0, true, workers) <= 0) {
    out.upper = 0;
  } else if (pressure_vs_one(b, 1.0, true, workers) > 0) {
    out.upper = 1;
  } else {
    double lo = 0, hi = 1;
    for (int i = 0; i < kBisectSteps; ++i) {
      double mid = (lo + hi) / 2;
      if (pressure_vs_one(b, mid, true, workers) <= 0) hi = mid;
      else lo = mid;
    }
    out.upper = hi;
  }
  // Lower: largest certified s with rounded-down pressure >= 1.
  if (pressure_vs_one(b, 1.0, false, workers) >= 0) {
    out.lower = 1;
  } else if (pressure_vs_one(b, 0.0, false, workers) < 0) {
    out.lower = 0;
  } else {
    double lo = 0, hi = 1;
    for (int i = 0; i < kBisectSteps; ++i) {
      double mid = (lo + hi) / 2;
      if (pressure_vs_one(b, mid, false, workers) >= 0) lo = mid;
      else hi = mid;
    }
    out.lower = lo;
  }
  out.lower = std::min(out.lower, out.upper);
  return out;
}

DUpper d_upper(const QuadSurd& t, int m, const MembershipBudget& budget, int workers, BracketMode mode) {
  if (t <= QuadSurd(3) || t > QuadSurd::sqrt(12)) throw DomainError("d_upper needs 3 < t <= sqrt(12)");
  LanguageSet ls = sigma_enumerate(t, m, budget, workers);
  std::vector<Word> words = ls.words(Verdict::In);
  std::vector<Word> open = ls.words(Verdict::Unresolved);
  words.insert(words.end(), open.begin(), open.end());
  DUpper out;
  out.unresolved = open.size();
  out.bracket = moran_bracket(words, mode, workers);
  out.value = 2 * out.bracket.upper;
  if (out.value >= 1) {
    out.value = 1;
    out.capped = true;
  }
  return out;
}

namespace {

// Value of [0; w] as a rational at tail 1/2, which orders cylinders of one length.
Rational probe(const Word& w) {
  Continuants c = continuants(w);
  Rational y(1, 2);
  Rational out = (c.p + c.p_prev * y) / (c.q + c.q_prev * y);
  out.canonicalize();
  return out;
}

// Periods giving the sup and inf of [0; w1 w2 ...] over block sequences.
struct TailPeriods {
  Word hi, lo;
};

TailPeriods extreme_periods(const std::vector<Word>& blocks) {
  auto [mn, mx] = std::minmax_element(blocks.begin(), blocks.end(),
                                      [](const Word& x, const Word& y) { return probe(x) < probe(y); });
  if (blocks.front().size() % 2 == 0) return {*mx, *mn};
  return {*mx + *mn, *mn + *mx};
}

}  // namespace

BlockCertificate certify_blocks(const std::vector<Word>& blocks, const QuadSurd& t) {
  if (blocks.empty()) throw EmptyLanguage("no blocks");
  std::size_t m = blocks.front().size();
  for (const auto& w : blocks)
    if (w.size() != m || m == 0) throw DomainError("blocks must share one positive length");
  std::vector<Word> rev;
  for (const auto& w : blocks) rev.push_back(w.reversed());
  TailPeriods fwd = extreme_periods(blocks), bwd = extreme_periods(rev);

  BlockCertificate out;
  out.window = m;
  bool first = true;
  for (const auto& b : blocks) {
    for (std::size_t p = 0; p < m; ++p) {
      Word after = b.substr(p + 1), before = b.substr(0, p).reversed();
      long lead = b.value(p);
      QuadSurd f = std::max(periodic_cf_value(after, fwd.hi, lead), periodic_cf_value(after, fwd.lo, lead));
      QuadSurd g = std::max(periodic_cf_value(before, bwd.hi), periodic_cf_value(before, bwd.lo));
      SurdSum v = SurdSum(f) + SurdSum(g);
      if (first || v > out.sup) out.sup = v;
      first = false;
    }
  }
  out.ok = out.sup <= SurdSum(t);
  return out;
}

double lambert_inv(double y) {
  const double e = std::exp(1.0);
  if (!(y >= -1.0 / e)) throw DomainError("lambert_inv needs y >= -1/e");
  if (y == 0) return 0;
  double w;
  if (y < -0.32) {
    double p = std::sqrt(2.0 * (e * y + 1.0));
    w = -1.0 + p - p * p / 3.0;
  } else if (y < 3.0) {
    w = std::log1p(y) * 0.75;
  } else {
    double l = std::log(y);
    w = l - std::log(l);
  }
  for (int i = 0; i < 100; ++i) {
    double ew = std::exp(w);
    double f = w * ew - y;
    double d = ew * (w + 1.0);
    if (d == 0) break;
    double step = f / (d - (w + 2.0) * f / (2.0 * w + 2.0));
    if (!std::isfinite(step)) step = f / d;
    double next = w - step;
    if (next <= -1.0) next = (w - 1.0) / 2.0;
    if (std::abs(next - w) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(next))) {
      w = next;
      break;
    }
    w = next;
  }
  return w;
}

double asym_c0() {
  static const double c0 = -std::log(std::log((3.0 + std::sqrt(5.0)) / 2.0));
  return c0;
}

double d_asymptotic_log(double L) {
  if (!(L > 0)) throw DomainError("d_asymptotic needs |log rho| > 0");
  return 2.0 * lambert_inv(std::exp(asym_c0()) * L) / L;
}

double d_asymptotic(double rho) {
  if (!(rho > 0 && rho < 1)) throw DomainError("d_asymptotic needs 0 < rho < 1");
  return d_asymptotic_log(-std::log(rho));
}

double thm2_bound_log(double L, double C) {
  if (!(L > std::exp(1.0))) throw DomainError("thm2_bound needs |log rho| > e");
  return (std::log(L) - std::log(std::log(L)) + C) / L;
}

double thm2_bound(double rho, double C) {
  if (!(rho > 0 && rho < 1)) throw DomainError("thm2_bound needs 0 < rho < 1");
  return thm2_bound_log(-std::log(rho), C);
}

}  // namespace spectra
