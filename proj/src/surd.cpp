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

#include "spectra/surd.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "spectra/error.hpp"

namespace spectra {

namespace {

constexpr unsigned kTrialBound = 2000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    std::vector<bool> sieve(kTrialBound + 1, true);
    for (unsigned i = 2; i <= kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Writes D = s^2 * core, with core free of squares of small primes and not a
// perfect square unless it equals 1.
void split_square(const Integer& D, Integer& s, Integer& core) {
  s = 1;
  core = D;
  for (unsigned p : small_primes()) {
    unsigned long pp = static_cast<unsigned long>(p) * p;
    if (core < pp) break;
    while (mpz_divisible_ui_p(core.get_mpz_t(), pp)) {
      mpz_divexact_ui(core.get_mpz_t(), core.get_mpz_t(), pp);
      s *= p;
    }
  }
  if (mpz_perfect_square_p(core.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), core.get_mpz_t());
    s *= root;
    core = 1;
  }
}

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Elements of Q(sqrt g_0, ..., sqrt g_{k-1}) as coefficient vectors indexed
// by subsets of generators: entry S multiplies prod_{i in S} sqrt(g_i).
using MQVec = std::vector<Rational>;

MQVec mq_mul(const std::vector<Integer>& g, const MQVec& a, const MQVec& b) {
  MQVec out(a.size(), Rational(0));
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (sgn(a[s]) == 0) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (sgn(b[t]) == 0) continue;
      Rational term = a[s] * b[t];
      std::size_t both = s & t;
      for (std::size_t i = 0; both; ++i, both >>= 1)
        if (both & 1) term *= g[i];
      out[s ^ t] += term;
    }
  }
  return out;
}

// Sign of an element over the first k generators. Splits off the top
// generator as A + B*sqrt(g) and squares only when the signs of A, B differ.
int mq_sign(const std::vector<Integer>& g, const MQVec& v, std::size_t k) {
  if (k == 0) return sgn(v[0]);
  std::size_t half = std::size_t{1} << (k - 1);
  MQVec A(v.begin(), v.begin() + half), B(v.begin() + half, v.begin() + 2 * half);
  int sb = mq_sign(g, B, k - 1);
  int sa = mq_sign(g, A, k - 1);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  MQVec a2 = mq_mul(g, A, A), b2 = mq_mul(g, B, B);
  for (std::size_t i = 0; i < half; ++i) a2[i] -= g[k - 1] * b2[i];
  return sa * mq_sign(g, a2, k - 1);
}

void mpfr_set_quad(mpfr_t out, const QuadSurd& x, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_z(out, x.radicand().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(out, out, MPFR_RNDN);
  mpfr_mul_z(out, out, x.q().get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(t, x.p().get_mpz_t(), MPFR_RNDN);
  mpfr_add(out, out, t, MPFR_RNDN);
  mpfr_div_z(out, out, x.r().get_mpz_t(), MPFR_RNDN);
  mpfr_clear(t);
}

void mpfr_set_sum(mpfr_t out, const SurdSum& x, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_q(out, x.rational_part().get_mpq_t(), MPFR_RNDN);
  for (const auto& term : x.terms()) {
    mpfr_set_z(t, term.radicand.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, term.coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_add(out, out, t, MPFR_RNDN);
  }
  mpfr_clear(t);
}

std::string mpfr_decimal(mpfr_t v, int digits, mpfr_prec_t prec) {
  mpfr_t scaled;
  mpfr_init2(scaled, prec);
  mpfr_ui_pow_ui(scaled, 10, static_cast<unsigned long>(digits), MPFR_RNDN);
  mpfr_mul(scaled, scaled, v, MPFR_RNDN);
  Integer q;
  mpfr_get_z(q.get_mpz_t(), scaled, MPFR_RNDNA);
  mpfr_clear(scaled);
  bool negative = q < 0;
  if (negative) q = -q;
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative) s.insert(0, "-");
  return s;
}

std::string coeff_radical(const Rational& c, const Integer& D, bool leading) {
  std::string out;
  Rational a = abs(c);
  if (!leading) out += c < 0 ? " - " : " + ";
  else if (c < 0) out += "-";
  if (a.get_num() != 1) out += a.get_num().get_str();
  out += "√" + D.get_str();
  if (a.get_den() != 1) out += "/" + a.get_den().get_str();
  return out;
}

}  // namespace

QuadSurd::QuadSurd(const Rational& v) : p_(v.get_num()), r_(v.get_den()) {}

QuadSurd::QuadSurd(Integer p, Integer q, Integer D, Integer r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(D)), r_(std::move(r)) {
  if (r_ == 0) throw DomainError("surd with zero denominator");
  if (d_ < 0) throw DomainError("surd with negative radicand");
  if (q_ != 0 && d_ != 0) {
    Integer s, core;
    split_square(d_, s, core);
    q_ *= s;
    d_ = core;
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
      d_ = 0;
    }
  }
  reduce();
}

QuadSurd::QuadSurd(Integer p, Integer q, Integer D, Integer r, Canonical)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(D)), r_(std::move(r)) {
  if (r_ == 0) throw DomainError("division by zero surd");
  reduce();
}

void QuadSurd::reduce() {
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  }
  Integer g = gcd3(p_, q_, r_);
  if (g != 1 && g != 0) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
}

QuadSurd QuadSurd::sqrt(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  return QuadSurd(0, 1, n, 1);
}

Rational QuadSurd::rational_part() const {
  Rational out(p_, r_);
  out.canonicalize();
  return out;
}

Rational QuadSurd::radical_coefficient() const {
  Rational out(q_, r_);
  out.canonicalize();
  return out;
}

int QuadSurd::sign() const {
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Integer lhs = p_ * p_, rhs = q_ * q_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sp : (c < 0 ? sq : 0);
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, d_, r_, Canonical{}); }

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, d_, r_, Canonical{}); }

QuadSurd QuadSurd::reciprocal() const {
  Integer den = p_ * p_ - q_ * q_ * d_;
  if (den == 0) throw DomainError("reciprocal of zero");
  return QuadSurd(r_ * p_, -r_ * q_, d_, den, Canonical{});
}

QuadSurd QuadSurd::mobius(const Integer& a, const Integer& b, const Integer& c,
                          const Integer& d) const {
  Integer n0 = a * p_ + b * r_, n1 = a * q_;
  Integer d0 = c * p_ + d * r_, d1 = c * q_;
  if (q_ == 0) {
    if (d0 == 0) throw DomainError("mobius pole");
    return QuadSurd(n0, 0, 0, d0, Canonical{});
  }
  Integer den = d0 * d0 - d1 * d1 * d_;
  if (den == 0) throw DomainError("mobius pole");
  return QuadSurd(n0 * d0 - n1 * d1 * d_, n1 * d0 - n0 * d1, d_, den, Canonical{});
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  if (x.q_ != 0 && y.q_ != 0 && x.d_ != y.d_)
    throw DomainError("adding surds over different radicands");
  const Integer& D = x.q_ != 0 ? x.d_ : y.d_;
  return QuadSurd(x.p_ * y.r_ + y.p_ * x.r_, x.q_ * y.r_ + y.q_ * x.r_, D, x.r_ * y.r_,
                  QuadSurd::Canonical{});
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  if (x.q_ != 0 && y.q_ != 0 && x.d_ != y.d_)
    throw DomainError("multiplying surds over different radicands");
  const Integer& D = x.q_ != 0 ? x.d_ : y.d_;
  return QuadSurd(x.p_ * y.p_ + x.q_ * y.q_ * D, x.p_ * y.q_ + x.q_ * y.p_, D, x.r_ * y.r_,
                  QuadSurd::Canonical{});
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
  int s;
  if (x.q_ == 0 || y.q_ == 0 || x.d_ == y.d_) s = (x - y).sign();
  else s = (SurdSum(x) - SurdSum(y)).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x <=> y) == 0; }

std::string QuadSurd::to_string() const {
  if (q_ == 0) return spectra::to_string(rational_part());
  std::string num;
  if (p_ != 0) num = p_.get_str() + (q_ > 0 ? "+" : "-");
  else if (q_ < 0) num = "-";
  Integer aq = abs(q_);
  if (aq != 1) num += aq.get_str();
  num += "√" + d_.get_str();
  if (r_ == 1) return num;
  if (p_ != 0) return "(" + num + ")/" + r_.get_str();
  return num + "/" + r_.get_str();
}

double QuadSurd::to_double() const {
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_quad(v, *this, 128);
  double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

SurdSum::SurdSum(const QuadSurd& x) : c0_(x.rational_part()) {
  if (!x.is_rational()) add_term(x.radical_coefficient(), x.radicand());
}

void SurdSum::add_term(const Rational& c, const Integer& D) {
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), D,
                             [](const RadicalTerm& t, const Integer& d) { return t.radicand < d; });
  if (it != terms_.end() && it->radicand == D) {
    it->coeff += c;
    if (sgn(it->coeff) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, RadicalTerm{c, D});
  }
}

int SurdSum::sign() const {
  if (terms_.empty()) return sgn(c0_);
  if (terms_.size() == 1) {
    int sa = sgn(c0_), sb = sgn(terms_[0].coeff);
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = c0_ * c0_, rhs = terms_[0].coeff * terms_[0].coeff * terms_[0].radicand;
    int c = cmp(lhs, rhs);
    return c > 0 ? sa : (c < 0 ? sb : 0);
  }
  std::vector<Integer> gens;
  for (const auto& t : terms_) gens.push_back(t.radicand);
  MQVec v(std::size_t{1} << gens.size(), Rational(0));
  v[0] = c0_;
  for (std::size_t i = 0; i < terms_.size(); ++i) v[std::size_t{1} << i] = terms_[i].coeff;
  return mq_sign(gens, v, gens.size());
}

SurdSum SurdSum::operator-() const {
  SurdSum out(*this);
  out.c0_ = -out.c0_;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

SurdSum operator+(const SurdSum& x, const SurdSum& y) {
  SurdSum out(x);
  out.c0_ += y.c0_;
  for (const auto& t : y.terms_) out.add_term(t.coeff, t.radicand);
  return out;
}

SurdSum operator*(const SurdSum& x, const Rational& k) {
  if (sgn(k) == 0) return SurdSum();
  SurdSum out(x);
  out.c0_ *= k;
  for (auto& t : out.terms_) t.coeff *= k;
  return out;
}

std::strong_ordering operator<=>(const SurdSum& x, const SurdSum& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::optional<QuadSurd> SurdSum::as_quad_surd() const {
  if (terms_.empty()) return QuadSurd(c0_);
  if (terms_.size() > 1) return std::nullopt;
  const auto& t = terms_[0];
  Integer r = c0_.get_den() * t.coeff.get_den();
  return QuadSurd(c0_.get_num() * t.coeff.get_den(), t.coeff.get_num() * c0_.get_den(), t.radicand, r);
}

std::string SurdSum::to_string() const {
  if (auto q = as_quad_surd()) return q->to_string();
  std::string out;
  bool leading = true;
  if (sgn(c0_) != 0) {
    out = spectra::to_string(c0_);
    leading = false;
  }
  for (const auto& t : terms_) {
    out += coeff_radical(t.coeff, t.radicand, leading);
    leading = false;
  }
  return out;
}

double SurdSum::to_double() const {
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_sum(v, *this, 128);
  double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

std::string decimal_string(const QuadSurd& x, int digits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64 +
                     static_cast<mpfr_prec_t>(mpz_sizeinbase(x.r().get_mpz_t(), 2));
  mpfr_t v;
  mpfr_init2(v, prec);
  mpfr_set_quad(v, x, prec);
  std::string s = mpfr_decimal(v, digits, prec);
  mpfr_clear(v);
  return s;
}

std::string decimal_string(const SurdSum& x, int digits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 128;
  for (const auto& t : x.terms())
    prec += static_cast<mpfr_prec_t>(mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2));
  mpfr_t v;
  mpfr_init2(v, prec);
  mpfr_set_sum(v, x, prec);
  std::string s = mpfr_decimal(v, digits, prec);
  mpfr_clear(v);
  return s;
}

}  // namespace spectra
