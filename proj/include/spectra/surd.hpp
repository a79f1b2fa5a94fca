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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "spectra/arith.hpp"

namespace spectra {

// Exact real (p + q*sqrt(D)) / r.
//
// Canonical form: r > 0, gcd(p, q, r) = 1, q = 0 iff D = 0. Square factors
// of D are pulled into q by trial division plus a perfect-square test on the
// cofactor, which leaves D square-free except for very large square factors
// beyond the trial bound. Ordering never depends on D being square-free.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(const Integer& v) : p_(v) {}  // NOLINT
  QuadSurd(const Rational& v);  // NOLINT
  QuadSurd(Integer p, Integer q, Integer D, Integer r);

  static QuadSurd sqrt(const Integer& n);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& radicand() const { return d_; }
  const Integer& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rational rational_part() const;
  Rational radical_coefficient() const;

  int sign() const;
  QuadSurd operator-() const;
  QuadSurd reciprocal() const;
  QuadSurd conjugate() const;
  // (a*x + b) / (c*x + d) for this x.
  QuadSurd mobius(const Integer& a, const Integer& b, const Integer& c, const Integer& d) const;

  // Mixed radicands throw DomainError; use SurdSum for those.
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.reciprocal(); }

  // Total order across arbitrary radicands.
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);
  friend bool operator==(const QuadSurd& x, const QuadSurd& y);

  // "(p+q√D)/r"; parts that vanish are dropped, e.g. "√221/5", "2", "-1+√3".
  std::string to_string() const;
  double to_double() const;

 private:
  struct Canonical {};
  QuadSurd(Integer p, Integer q, Integer D, Integer r, Canonical);
  void reduce();

  Integer p_{0}, q_{0}, d_{0}, r_{1};
};

struct RadicalTerm {
  Rational coeff;
  Integer radicand;
};

// c0 + sum_i c_i * sqrt(D_i) with distinct radicands D_i > 1.
//
// Values coming out of the library carry at most two radicals. Sums and
// differences may carry more; the sign test handles any count exactly.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& c) : c0_(c) {}  // NOLINT
  SurdSum(long c) : c0_(c) {}  // NOLINT
  SurdSum(const QuadSurd& x);  // NOLINT

  const Rational& rational_part() const { return c0_; }
  const std::vector<RadicalTerm>& terms() const { return terms_; }

  int sign() const;
  SurdSum operator-() const;
  friend SurdSum operator+(const SurdSum& x, const SurdSum& y);
  friend SurdSum operator-(const SurdSum& x, const SurdSum& y) { return x + (-y); }
  friend SurdSum operator*(const SurdSum& x, const Rational& k);

  friend std::strong_ordering operator<=>(const SurdSum& x, const SurdSum& y);
  friend bool operator==(const SurdSum& x, const SurdSum& y) { return (x - y).sign() == 0; }

  // Present when at most one radical remains.
  std::optional<QuadSurd> as_quad_surd() const;

  // "c0 + c1√D1 + c2√D2" with reduced rationals.
  std::string to_string() const;
  double to_double() const;

 private:
  void add_term(const Rational& c, const Integer& D);
  Rational c0_{0};
  std::vector<RadicalTerm> terms_;  // sorted by radicand
};

// Decimal shadow with `digits` fractional digits.
std::string decimal_string(const QuadSurd& x, int digits);
std::string decimal_string(const SurdSum& x, int digits);

}  // namespace spectra
