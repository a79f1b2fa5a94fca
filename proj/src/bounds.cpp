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

#include "spectra/bounds.hpp"

#include "spectra/error.hpp"

namespace spectra {

namespace {

// Element x + y*sqrt(3) of Z[sqrt 3].
struct Z3 {
  Integer x, y;
};

Z3 mul(const Z3& p, const Z3& q) { return {p.x * q.x + 3 * p.y * q.y, p.x * q.y + p.y * q.x}; }
Z3 add(const Z3& p, const Z3& q) { return {p.x + q.x, p.y + q.y}; }

int sign(const Z3& p) {
  int sx = sgn(p.x), sy = sgn(p.y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  int c = cmp(p.x * p.x, 3 * p.y * p.y);
  return c > 0 ? sx : (c < 0 ? sy : 0);
}

// Tail values (u + v sqrt 3) / w for [0; 1,2,1,2,...] and [0; 2,1,2,1,...].
struct Tail {
  long u, v, w;
};
constexpr Tail kTailMax{-1, 1, 1};
constexpr Tail kTailMin{-1, 1, 2};

void check_threshold(const QuadSurd& t) {
  if (!t.is_rational() && t.radicand() != 3)
    throw DomainError("threshold must be rational or lie in Q(sqrt 3): " + t.to_string());
}

}  // namespace

ExtensionBounds::ExtensionBounds(std::string_view digits) : n_(digits.size()) {
  x_.reserve(n_);
  for (char c : digits) {
    if (c != '1' && c != '2') throw DomainError("digits must be 1 or 2");
    x_.push_back(c - '0');
  }
  // A_k = [[0, 1], [1, k]]; A_k * S = [[c, d], [a + k c, b + k d]].
  fwd_.resize(n_ + 1);
  fwd_[n_] = {1, 0, 0, 1};
  for (std::size_t j = n_; j-- > 0;) {
    const Mat& s = fwd_[j + 1];
    fwd_[j] = {s.c, s.d, s.a + x_[j] * s.c, s.b + x_[j] * s.d};
  }
  bwd_.resize(n_ + 1);
  bwd_[0] = {1, 0, 0, 1};
  for (std::size_t i = 1; i <= n_; ++i) {
    const Mat& s = bwd_[i - 1];
    bwd_[i] = {s.c, s.d, s.a + x_[i - 1] * s.c, s.b + x_[i - 1] * s.d};
  }
}

namespace {

// Numerator and denominator (in Z[sqrt 3]) of S(tau) for the tail choice
// that minimises (or maximises) it; denominators are positive.
void evaluate(const Integer& a, const Integer& b, const Integer& c, const Integer& d, std::size_t digits,
              Bound which, Z3& num, Z3& den) {
  bool increasing = digits % 2 == 0;  // det = (-1)^digits
  bool want_max = which == Bound::Max;
  const Tail& t = (increasing == want_max) ? kTailMax : kTailMin;
  num = {a * t.u + b * t.w, a * t.v};
  den = {c * t.u + d * t.w, c * t.v};
}

}  // namespace

int ExtensionBounds::compare(std::size_t i, Bound which, const QuadSurd& t) const {
  check_threshold(t);
  const Mat& f = fwd_[i + 1];
  const Mat& g = bwd_[i];
  Z3 nf, df, nb, db;
  evaluate(f.a, f.b, f.c, f.d, n_ - 1 - i, which, nf, df);
  evaluate(g.a, g.b, g.c, g.d, i, which, nb, db);
  // sign((x_i - t) df db + nf db + nb df), t = (tp + tq sqrt 3) / tr
  Z3 p = mul(df, db);
  Z3 q = add(mul(nf, db), mul(nb, df));
  Z3 lead{x_[i] * t.r() - t.p(), -t.q()};
  Z3 e = add(mul(lead, p), {t.r() * q.x, t.r() * q.y});
  return sign(e);
}

long ExtensionBounds::first_min_above(const QuadSurd& t) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (compare(i, Bound::Min, t) > 0) return static_cast<long>(i);
  return -1;
}

QuadSurd ExtensionBounds::value(std::size_t i, Bound which) const {
  const Mat& f = fwd_[i + 1];
  const Mat& g = bwd_[i];
  Z3 nf, df, nb, db;
  evaluate(f.a, f.b, f.c, f.d, n_ - 1 - i, which, nf, df);
  evaluate(g.a, g.b, g.c, g.d, i, which, nb, db);
  QuadSurd F = QuadSurd(nf.x, nf.y, 3, 1) / QuadSurd(df.x, df.y, 3, 1);
  QuadSurd B = QuadSurd(nb.x, nb.y, 3, 1) / QuadSurd(db.x, db.y, 3, 1);
  return QuadSurd(x_[i]) + F + B;
}

}  // namespace spectra
