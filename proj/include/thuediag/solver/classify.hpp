#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "thuediag/solver/record.hpp"

namespace thuediag {

enum class TieBreak { low, high };

/// u/v = rho * L_u/L_v with rho a fixed principal r-th root of scale_u/scale_v. The related
/// index is round(r arg(u/v) / 2pi) mod r; a tie happens exactly when xi/eta is a negative real.
struct RelatedPosition {
  int index = 0;
  bool tie = false;
  bool undecided = false;
  long bits = 0;
};

namespace detail {

inline int mod_r(const Integer& k, int r) {
  Integer m = k % r;
  if (m < 0) m += r;
  return static_cast<int>(m.get_si());
}

inline bool negative_real(const QuadElem& q) { return q.is_real() && q.sign() == Sign::negative; }

inline cert::Interval scale_arg(const QuadElem& s, long prec) {
  if (s.is_real()) return s.sign() == Sign::negative ? cert::Interval::pi(prec) : cert::Interval(0L, prec);
  return cert::arg(cert::embed(s, prec));
}

}  // namespace detail

inline RelatedPosition related_position(const DiagForm& f, const SolutionRecord& s, TieBreak tb = TieBreak::low, long budget = 0) {
  int r = f.r();
  RelatedPosition out;
  if (s.eta.is_zero()) return out;  // v = 0: convention k = 0
  if (s.xi.is_zero()) {             // u = 0: every root is equidistant
    out.tie = true;
    out.index = tb == TieBreak::low ? 0 : r - 1;
    return out;
  }
  QuadElem ratio = s.xi / s.eta;
  bool tie = detail::negative_real(ratio);
  QuadElem scale = f.u().scale / f.v().scale;
  QuadElem lu = f.linear_u(s.x, s.y), lv = f.linear_v(s.x, s.y);
  auto pick = [&](const Integer& lo_half) {
    // position lo_half + 1/2: the two nearest roots tie
    int a = detail::mod_r(lo_half, r), b = detail::mod_r(lo_half + 1, r);
    out.tie = true;
    out.index = tb == TieBreak::low ? std::min(a, b) : std::max(a, b);
  };

  if (f.D() > 0) {
    // real field: position is 0 or 1/2 plus 0 or r/2
    Rational pos = 0;
    if (scale.sign() == Sign::negative) pos += Rational(1, 2);
    if ((lu / lv).sign() == Sign::negative) pos += Rational(r, 2);
    if (tie) {
      pick(floor_q(pos));
    } else {
      out.index = detail::mod_r(floor_q(pos + Rational(1, 2)), r);
    }
    return out;
  }

  if (budget <= 0) budget = cert::default_bits_budget();
  for (long bits = 64; bits <= budget; bits *= 2) {
    out.bits = bits;
    cert::Interval two_pi = cert::Interval::pi(bits) * cert::Interval(2L, bits);
    cert::Interval theta = detail::scale_arg(scale, bits) * cert::Interval(make_rational(1, r), bits) +
                           cert::arg_any(cert::embed(lu, bits)) - cert::arg_any(cert::embed(lv, bits));
    cert::Interval pos = theta * cert::Interval(Rational(r), bits) / two_pi;
    if (tie) {
      Integer lo = floor_q(pos.lo_rational()), hi = floor_q(pos.hi_rational());
      if (lo == hi) {
        pick(lo);
        return out;
      }
      continue;
    }
    Integer lo = floor_q(pos.lo_rational() + Rational(1, 2)), hi = floor_q(pos.hi_rational() + Rational(1, 2));
    if (lo == hi) {
      out.index = detail::mod_r(lo, r);
      return out;
    }
  }
  out.undecided = true;
  out.index = 0;
  return out;
}

struct RelatedClassification {
  int r = 0;
  TieBreak tie_break = TieBreak::low;
  std::map<int, std::vector<SolutionRecord>> groups;  // descending zeta
  int ties = 0;
  int undecided = 0;
  long max_bits = 0;

  size_t size() const {
    size_t n = 0;
    for (const auto& [k, g] : groups) n += g.size();
    return n;
  }
  /// S'_omega: the group minus its maximal-zeta element.
  std::vector<SolutionRecord> reduced(int k) const {
    auto it = groups.find(k);
    if (it == groups.end() || it->second.empty()) return {};
    return {it->second.begin() + 1, it->second.end()};
  }
  const SolutionRecord* excluded_max(int k) const {
    auto it = groups.find(k);
    return it == groups.end() || it->second.empty() ? nullptr : &it->second.front();
  }
  std::vector<SolutionRecord> all() const {
    std::vector<SolutionRecord> out;
    for (const auto& [k, g] : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
  }
};

/// Descending zeta; equal zeta broken by |y|, |x|, then x.
inline bool zeta_before(const SolutionRecord& a, const SolutionRecord& b) {
  auto c = quad_compare(a.zeta_sq, b.zeta_sq);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
  if (abs(a.y) != abs(b.y)) return abs(a.y) < abs(b.y);
  if (abs(a.x) != abs(b.x)) return abs(a.x) < abs(b.x);
  return a.x < b.x;
}

inline RelatedClassification classify(const DiagForm& f, std::vector<SolutionRecord> sols, TieBreak tb = TieBreak::low, long budget = 0) {
  RelatedClassification cls;
  cls.r = f.r();
  cls.tie_break = tb;
  for (auto& s : sols) {
    RelatedPosition p = related_position(f, s, tb, budget);
    s.related_index = p.index;
    s.tie = p.tie;
    s.decided_bits = p.bits;
    cls.ties += p.tie;
    cls.undecided += p.undecided;
    cls.max_bits = std::max(cls.max_bits, p.bits);
    cls.groups[p.index].push_back(s);
  }
  for (auto& [k, g] : cls.groups) std::sort(g.begin(), g.end(), zeta_before);
  return cls;
}

}  // namespace thuediag
