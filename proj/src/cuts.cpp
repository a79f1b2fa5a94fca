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

#include "spectra/cuts.hpp"

#include <algorithm>

#include "spectra/bounds.hpp"
#include "spectra/error.hpp"
#include "spectra/exact_cf.hpp"

namespace spectra {

Cut::Cut(Word l, Word r) : left(std::move(l)), right(std::move(r)) {
  if (left.empty() || right.empty()) throw DomainError("both sides of a cut must be nonempty");
}

Cut Cut::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("a cut needs exactly one '|'");
  Word l(expand_letters(text.substr(0, bar)));
  Word r(expand_letters(text.substr(bar + 1)));
  if (l.empty() || r.empty()) throw ParseError("both sides of a cut must be nonempty");
  return Cut(l, r);
}

std::string Cut::to_string() const { return left.str() + "|" + right.str(); }

std::string to_string(CutKind k) {
  switch (k) {
    case CutKind::Good: return "Good";
    case CutKind::Bad: return "Bad";
    case CutKind::Mixed: return "Mixed";
    default: return "Unresolved";
  }
}

std::string to_string(PushKind k) {
  switch (k) {
    case PushKind::GoodSymmetric: return "good-symmetric";
    case PushKind::GoodAsymmetric: return "good-asymmetric";
    case PushKind::BadSymmetric: return "bad-symmetric";
    default: return "bad-asymmetric";
  }
}

PushKind parse_push_kind(std::string_view text) {
  if (text == "good-symmetric") return PushKind::GoodSymmetric;
  if (text == "good-asymmetric") return PushKind::GoodAsymmetric;
  if (text == "bad-symmetric") return PushKind::BadSymmetric;
  if (text == "bad-asymmetric") return PushKind::BadAsymmetric;
  throw ParseError("unknown push kind: " + std::string(text));
}

namespace {

const QuadSurd kThree(3);

struct Node {
  Word word;
  std::size_t bar;
};

}  // namespace

CutClass classify_cut(const Cut& c, const CutBudget& budget) {
  CutClass out;
  Word ctx = c.context();
  std::size_t p = c.bar();
  {
    ExtensionBounds eb(ctx.str());
    for (int k = 0; k < 2; ++k) {
      out.min[k] = eb.value(p + k, Bound::Min);
      out.max[k] = eb.value(p + k, Bound::Max);
    }
  }
  out.nodes = 1;
  if (out.max[0] < SurdSum(3) && out.max[1] < SurdSum(3)) {
    out.kind = CutKind::Good;
    return out;
  }
  std::vector<Node> level{{ctx, p}};
  for (int depth = 0; depth <= budget.max_depth; ++depth) {
    std::vector<Node> alive;
    for (const Node& nd : level) {
      ExtensionBounds eb(nd.word.str());
      if (eb.compare(nd.bar, Bound::Min, kThree) > 0 || eb.compare(nd.bar + 1, Bound::Min, kThree) > 0) continue;
      if (eb.compare(nd.bar, Bound::Max, kThree) < 0 && eb.compare(nd.bar + 1, Bound::Max, kThree) < 0) {
        out.kind = CutKind::Mixed;
        out.depth = depth;
        return out;
      }
      alive.push_back(nd);
    }
    if (alive.empty()) {
      out.kind = CutKind::Bad;
      out.depth = depth;
      return out;
    }
    if (depth == budget.max_depth) break;
    level.clear();
    bool right = depth % 2 == 0;
    for (const Node& nd : alive) {
      for (const char* d : {"1", "2"}) {
        if (right) level.push_back({nd.word + Word(d), nd.bar});
        else level.push_back({Word(d) + nd.word, nd.bar + 1});
      }
    }
    out.nodes += level.size();
    if (out.nodes > budget.node_limit) {
      out.depth = depth;
      return out;
    }
  }
  out.depth = budget.max_depth;
  return out;
}

namespace {

ABWord to_ab(const Word& w, const char* side) {
  try {
    return from_digits(w);
  } catch (const DomainError&) {
    throw TemplateMismatch(std::string(side) + " side of the cut is not an {a,b} word");
  }
}

// Longest common prefix of s and t starting at offset 1 in both.
std::size_t common_after_first(const ABWord& s, const ABWord& t) {
  std::size_t k = 0;
  while (1 + k < s.size() && 1 + k < t.size() && s[1 + k] == t[1 + k]) ++k;
  return k;
}

struct Shape {
  char left_end, right_start, left_next, right_next;
  bool asymmetric;
};

Shape shape_of(PushKind kind) {
  switch (kind) {
    case PushKind::BadAsymmetric: return {'b', 'a', 'b', 'a', true};
    case PushKind::BadSymmetric: return {'a', 'b', 'a', 'b', false};
    case PushKind::GoodAsymmetric: return {'a', 'b', 'b', 'a', true};
    default: return {'b', 'a', 'a', 'b', false};
  }
}

ABWord plus(const ABWord& u) { return u.size() > 1 ? u.drop_first() : ABWord(); }
ABWord minus(const ABWord& v) { return v.size() > 1 ? v.drop_last() : ABWord(); }

}  // namespace

CutTemplate match_template(const Cut& c, PushKind kind) {
  ABWord L = to_ab(c.left, "left"), R = to_ab(c.right, "right");
  ABWord Lr = L.reversed();  // read leftwards from the bar
  Shape sh = shape_of(kind);
  if (Lr[0] != sh.left_end || R[0] != sh.right_start)
    throw TemplateMismatch("letters at the bar do not fit " + to_string(kind));
  std::size_t k = common_after_first(Lr, R);
  if (1 + k >= Lr.size() || 1 + k >= R.size())
    throw TemplateMismatch("cut ends before the two sides separate");
  if (Lr[1 + k] != sh.left_next || R[1 + k] != sh.right_next)
    throw TemplateMismatch("letters after the common part do not fit " + to_string(kind));
  CutTemplate t;
  t.w = R.substr(1, k);
  t.X = Lr.substr(k + 2).reversed();
  t.Y = R.substr(k + 2);
  return t;
}

Cut push_cut(const UVWord& W, const Cut& c, PushKind kind) {
  CutTemplate t = match_template(c, kind);
  if (W.empty()) return c;
  ABWord u = apply_subst(W, ABWord("a")), v = apply_subst(W, ABWord("b"));
  Shape sh = shape_of(kind);
  if (sh.asymmetric) {
    if (to_digits(apply_subst(W, t.X)).size() < to_digits(u).size())
      throw TemplateMismatch("|W(X)| < |W(a)|");
    if (to_digits(apply_subst(W, t.Y)).size() < to_digits(v).size())
      throw TemplateMismatch("|W(Y)| < |W(b)|");
  }
  ABWord core_l = plus(u) + apply_subst(W, t.w.reversed()) + minus(v);
  ABWord core_r = plus(u) + apply_subst(W, t.w) + minus(v);
  // The letters beside the bar are kept; the outer ones are those following w.
  ABWord left = ABWord(std::string(1, sh.left_next)) + core_l + ABWord(std::string(1, sh.left_end));
  ABWord right = ABWord(std::string(1, sh.right_start)) + core_r + ABWord(std::string(1, sh.right_next));
  return Cut(to_digits(left), to_digits(right));
}

namespace {

// Positions whose cuts touch [s, e): s - 1 .. e, clipped.
bool all_good(const Word& w, std::size_t s, std::size_t e, std::size_t* count) {
  ExtensionBounds eb(w.str());
  std::size_t lo = s > 0 ? s - 1 : 0, hi = std::min(e, w.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i)
    if (eb.compare(i, Bound::Max, kThree) >= 0) return false;
  if (count) *count = hi - lo;
  return true;
}

}  // namespace

ControlReport check_control(const ABWord& X, const ABWord& R, const ABWord& Y, const UVWord& W) {
  if (R.empty()) throw DomainError("control check needs a nonempty R");
  ControlReport rep;
  Word dx = to_digits(X), dr = to_digits(R), dy = to_digits(Y);
  Word wx = to_digits(apply_subst(W, X)), wr = to_digits(apply_subst(W, R)), wy = to_digits(apply_subst(W, Y));
  if (wx.size() < to_digits(apply_subst(W, ABWord("a"))).size() ||
      wy.size() < to_digits(apply_subst(W, ABWord("b"))).size())
    throw PreconditionUnverified("|W(X)| >= |W(a)| and |W(Y)| >= |W(b)| are required");
  rep.hypothesis = all_good(dx + dr + dy, dx.size(), dx.size() + dr.size(), nullptr);
  if (!rep.hypothesis) throw PreconditionUnverified("some cut of X R Y touching R is not good");
  rep.conclusion = all_good(wx + wr + wy, wx.size(), wx.size() + wr.size(), &rep.image_cuts);
  return rep;
}

namespace {

std::optional<long> locate(const BiSeq& s, const Word& w) {
  long span = static_cast<long>(s.left_period().size() + s.left_transient().size() + s.right_transient().size() +
                                s.right_period().size() + w.size());
  for (long i = -span; i <= span; ++i)
    if (s.window(i, w.size()) == w) return i;
  return std::nullopt;
}

}  // namespace

BadCutComparison compare_bad_cuts(const Word& omega, int x, int y, const Word& omega_ext, const QuadSurd& t,
                                  const std::optional<BiSeq>& witness, const MembershipBudget& budget) {
  if (x == y || x < 1 || x > 2 || y < 1 || y > 2) throw DomainError("x and y must be distinct digits");
  if (!omega_ext.starts_with(omega)) throw DomainError("the extended word must begin with the base word");
  if (t <= kThree) throw DomainError("threshold must exceed 3");
  Word dx(std::string(1, static_cast<char>('0' + x))), dy(std::string(1, static_cast<char>('0' + y)));
  Word base = dx + omega.reversed() + Word("1122") + omega + dy;
  long offset = static_cast<long>(omega.size()) + 3;

  BadCutComparison out;
  if (witness) {
    auto at = locate(*witness, base);
    if (!at) throw PreconditionUnverified("the witness does not contain the base cut");
    out.witness = *witness;
    out.witness_position = *at + offset;
  } else {
    MembershipCertificate cert = membership(base, t, budget);
    if (cert.verdict != Verdict::In) throw PreconditionUnverified("base cut occurrence not certified: " + to_string(cert.verdict));
    out.witness = *cert.witness;
    out.witness_position = offset;
  }
  out.witness_value = markov_value(out.witness).value;
  if (out.witness_value > SurdSum(t)) throw PreconditionUnverified("witness Markov value exceeds the threshold");
  out.base_lambda = lambda_at(out.witness, out.witness_position);

  QuadSurd fwd = extremal_tail(Word("2") + omega_ext + dy, Extremum::Max).value;
  QuadSurd bwd = extremal_tail(Word("11") + omega_ext + dx, Extremum::Max).value;
  out.extended_sup = SurdSum(QuadSurd(2) + fwd) + SurdSum(bwd);
  out.verdict = out.extended_sup < SurdSum(t);
  return out;
}

}  // namespace spectra
