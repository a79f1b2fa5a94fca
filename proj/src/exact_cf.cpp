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

#include "spectra/exact_cf.hpp"

#include <mpfr.h>

#include <map>
#include <tuple>

#include "spectra/error.hpp"

namespace spectra {

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Rational Mobius::apply(const Rational& x) const {
  Rational den = c * x + d;
  if (den == 0) throw DomainError("mobius pole");
  Rational out = (a * x + b) / den;
  out.canonicalize();
  return out;
}

Mobius digit_map(const Word& w) {
  // y -> 1/(k + y) is [[0, 1], [1, k]]; compose left to right.
  Mobius m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    long k = w.value(i);
    Mobius next{m.b, m.a + k * m.b, m.d, m.c + k * m.d};
    m = std::move(next);
  }
  return m;
}

Continuants continuants(const Word& w) {
  Continuants c{0, 1, 1, 0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    long k = w.value(i);
    Integer p = k * c.p + c.p_prev, q = k * c.q + c.q_prev;
    c.p_prev = std::move(c.p);
    c.q_prev = std::move(c.q);
    c.p = std::move(p);
    c.q = std::move(q);
  }
  return c;
}

Rational eval_cf(const Word& w) {
  if (w.empty()) throw DomainError("eval_cf of the empty word");
  Continuants c = continuants(w);
  Rational out(c.p, c.q);
  out.canonicalize();
  return out;
}

Cylinder cylinder(const Word& w) {
  if (w.empty()) throw DomainError("cylinder of the empty word");
  Continuants c = continuants(w);
  // Endpoints: tail value 0 gives p/q and tail value 1 gives (p + p')/(q + q').
  Rational x(c.p, c.q), y(c.p + c.p_prev, c.q + c.q_prev);
  x.canonicalize();
  y.canonicalize();
  Cylinder out{w, x, y, 0};
  if (out.hi < out.lo) std::swap(out.lo, out.hi);
  out.length = out.hi - out.lo;
  return out;
}

long r_exponent(const Word& w) {
  Cylinder c = cylinder(w);
  Integer n = c.length.get_den();  // |I(w)| = 1/(q(q+q')) has numerator 1
  // ln n < bits * ln 2, so k ranges over [0, bits].
  long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  mpfr_prec_t prec = 64 + 2 * bits;
  auto e_pow_le = [&](long k) {
    // Decides e^k <= n; e^k is irrational for k > 0 so ties never occur.
    if (k == 0) return n >= 1;
    for (mpfr_prec_t p = prec;; p *= 2) {
      mpfr_t lo, hi;
      mpfr_inits2(p, lo, hi, static_cast<mpfr_ptr>(nullptr));
      mpfr_set_si(lo, k, MPFR_RNDD);
      mpfr_set_si(hi, k, MPFR_RNDU);
      mpfr_exp(lo, lo, MPFR_RNDD);
      mpfr_exp(hi, hi, MPFR_RNDU);
      int below = mpfr_cmp_z(hi, n.get_mpz_t());  // hi <= n certifies
      int above = mpfr_cmp_z(lo, n.get_mpz_t());  // lo > n certifies
      mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
      if (below <= 0) return true;
      if (above > 0) return false;
    }
  };
  long lo = 0, hi = bits + 1;  // e^lo <= n < e^hi
  while (hi - lo > 1) {
    long mid = (lo + hi) / 2;
    if (e_pow_le(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

QuadSurd periodic_cf_value(const Word& preperiod, const Word& period, long integer_part) {
  if (period.empty()) throw DomainError("periodic_cf_value with an empty period");
  // y = P(y) with P = [[a, b], [c, d]]: c y^2 + (d - a) y - b = 0, positive root.
  Mobius P = digit_map(period);
  Integer B = P.d - P.a;
  Integer disc = B * B + 4 * P.c * P.b;
  QuadSurd y(-B, 1, disc, 2 * P.c);
  QuadSurd v = preperiod.empty() ? y : digit_map(preperiod).apply(y);
  return integer_part == 0 ? v : v + QuadSurd(integer_part);
}

const QuadSurd& free_tail_max() {
  static const QuadSurd v(-1, 1, 3, 1);
  return v;
}

const QuadSurd& free_tail_min() {
  static const QuadSurd v(-1, 1, 3, 2);
  return v;
}

namespace {

// Greedy digit choice for the k-th partial quotient (1-based, k = |prefix|+1,
// ...): [0; x1, x2, ...] increases in x_k for even k and decreases for odd k.
int preferred_digit(std::size_t k, Extremum dir) {
  bool want_large = (k % 2 == 0) == (dir == Extremum::Max);
  return want_large ? 2 : 1;
}

bool isolated(int x, int y, int z) { return x != y && y != z; }

}  // namespace

ExtremalTail extremal_tail(const Word& prefix, Extremum direction, TailConstraint constraint) {
  ExtremalTail out;
  if (constraint == TailConstraint::Free) {
    // x_{k+1} preferred, then alternate; period 2 from the start.
    int first = preferred_digit(prefix.size() + 1, direction);
    out.period = first == 1 ? Word("12") : Word("21");
    out.value = periodic_cf_value(prefix, out.period);
    return out;
  }
  // Constrained greedy: the state (parity, last two digits) determines the
  // next choice, so the tail is eventually periodic with a short period.
  std::string digits;
  int p2 = prefix.size() >= 2 ? prefix.value(prefix.size() - 2) : 0;
  int p1 = prefix.size() >= 1 ? prefix.value(prefix.size() - 1) : 0;
  std::map<std::tuple<int, int, int>, std::size_t> seen;
  for (std::size_t k = prefix.size() + 1;; ++k) {
    auto state = std::make_tuple(static_cast<int>(k % 2), p2, p1);
    auto it = seen.find(state);
    if (it != seen.end()) {
      out.preperiod = Word::raw(digits.substr(0, it->second));
      out.period = Word::raw(digits.substr(it->second));
      break;
    }
    seen.emplace(state, digits.size());
    int want = preferred_digit(k, direction);
    int d = want;
    if (p2 != 0 && p1 != 0 && isolated(p2, p1, want)) d = 3 - want;
    digits.push_back(static_cast<char>('0' + d));
    p2 = p1;
    p1 = d;
  }
  out.value = periodic_cf_value(prefix + out.preperiod, out.period);
  return out;
}

}  // namespace spectra
