#pragma once

#include <compare>
#include <string>
#include <vector>

#include "thuediag/exactnum/certified.hpp"
#include "thuediag/exactnum/quad.hpp"

namespace thuediag {

/// base^exponent with base a positive real quadratic element.
struct PowerTerm {
  QuadElem base;
  Rational exponent;
};

/// One side of a comparison: a product of positive bases raised to rational exponents.
class PowerProduct {
 public:
  PowerProduct() = default;
  PowerProduct(std::initializer_list<PowerTerm> terms) : terms_(terms) {}

  PowerProduct& times(const QuadElem& base, const Rational& exponent) {
    terms_.push_back({base, exponent});
    return *this;
  }
  PowerProduct& times(const Rational& base, const Rational& exponent) {
    return times(QuadElem(base, Integer(1)), exponent);
  }
  PowerProduct& times(const Integer& base, const Rational& exponent) {
    return times(Rational(base), exponent);
  }
  PowerProduct& times(long base, const Rational& exponent) { return times(Rational(base), exponent); }

  const std::vector<PowerTerm>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += "*";
      out += "(" + t.base.str() + ")";
      if (t.exponent != 1) out += "^(" + t.exponent.get_str() + ")";
    }
    return out;
  }

 private:
  std::vector<PowerTerm> terms_;
};

namespace detail {

// Multiply an accumulator, promoting it to the field of an irrational factor.
inline void accumulate(QuadElem& acc, const QuadElem& factor) {
  if (acc.d() != factor.d()) {
    if (acc.is_rational())
      acc = QuadElem(acc.a(), factor.d());
    else if (factor.is_rational()) {
      acc *= factor.a();
      return;
    } else {
      acc = acc.rebase(factor.d());
    }
  }
  acc *= factor;
}

inline Integer cleared(const Rational& e, const Integer& L) {
  Rational v = e * Rational(L);
  return v.get_num();
}

}  // namespace detail

/// Exact ordering of lhs vs rhs, by clearing exponent denominators and moving
/// negative exponents across.
inline std::strong_ordering compare(const PowerProduct& lhs, const PowerProduct& rhs) {
  Integer L = 1;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : side->terms()) {
      if (t.base.sign() != Sign::positive) throw DomainError("non-positive base in power comparison: " + t.base.str());
      L = lcm(L, t.exponent.get_den());
    }
  // Remove a common factor from all cleared exponents.
  Integer g = 0;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : side->terms()) g = gcd(g, detail::cleared(t.exponent, L));
  if (g == 0) g = 1;

  QuadElem left(Rational(1), Integer(1)), right(Rational(1), Integer(1));
  auto place = [&](const PowerTerm& t, bool on_left) {
    Integer e = detail::cleared(t.exponent, L) / g;
    if (e == 0) return;
    if (e < 0) {
      on_left = !on_left;
      e = -e;
    }
    if (!e.fits_ulong_p()) throw DomainError("exponent too large in power comparison");
    QuadElem p = t.base.is_rational() ? QuadElem(qpow(t.base.a(), static_cast<long>(e.get_ui())), t.base.d())
                                      : t.base.pow(e.get_ui());
    detail::accumulate(on_left ? left : right, p);
  };
  for (const auto& t : lhs.terms()) place(t, true);
  for (const auto& t : rhs.terms()) place(t, false);
  if (left.d() != right.d()) {
    if (left.is_rational())
      left = QuadElem(left.a(), right.d());
    else if (right.is_rational())
      right = QuadElem(right.a(), left.d());
    else
      right = right.rebase(left.d());
  }
  return quad_compare(left, right);
}

/// base^(exp_num/exp_den) vs rhs^(rhs_exp_num/rhs_exp_den).
inline std::strong_ordering pow_compare(const Rational& base, long exp_num, long exp_den, const Rational& rhs,
                                        long rhs_exp_num, long rhs_exp_den) {
  if (base <= 0 || rhs <= 0) throw DomainError("pow_compare requires positive bases");
  if (exp_den <= 0 || rhs_exp_den <= 0) throw DomainError("pow_compare requires positive exponent denominators");
  PowerProduct l, r;
  l.times(base, make_rational(exp_num, exp_den));
  r.times(rhs, make_rational(rhs_exp_num, rhs_exp_den));
  return compare(l, r);
}

/// How a guarded comparison was decided.
enum class CompareRoute { exact, certified_log };

struct GuardedOrdering {
  std::strong_ordering order;
  CompareRoute route;
};

namespace detail {

inline double estimated_bits(const PowerProduct& p) {
  double bits = 0;
  for (const auto& t : p.terms()) {
    Rational e = abs(t.exponent);
    double size = static_cast<double>(bit_length(t.base.a().get_num()) + bit_length(t.base.a().get_den()) +
                                      bit_length(t.base.b().get_num()) + bit_length(t.base.b().get_den()) + 2);
    bits += size * e.get_d() * static_cast<double>(t.exponent.get_den().get_d());
  }
  return bits;
}

}  // namespace detail

/// Exact comparison while the cleared powers stay below `max_bits`; beyond that the
/// sides are compared through outward-rounded logarithms, refined up to `budget` bits.
inline GuardedOrdering compare_guarded(const PowerProduct& lhs, const PowerProduct& rhs, double max_bits = 1 << 22,
                                       long budget = 0) {
  if (detail::estimated_bits(lhs) + detail::estimated_bits(rhs) <= max_bits) return {compare(lhs, rhs), CompareRoute::exact};
  if (budget <= 0) budget = cert::default_bits_budget();
  for (long prec = 128; prec <= budget; prec *= 2) {
    auto side = [&](const PowerProduct& p) {
      cert::Interval acc(0L, prec);
      for (const auto& t : p.terms()) {
        if (t.base.sign() != Sign::positive) throw DomainError("non-positive base in power comparison: " + t.base.str());
        acc = acc + cert::log(cert::embed(t.base, prec).re) * cert::Interval(t.exponent, prec);
      }
      return acc;
    };
    cert::Interval diff = side(lhs) - side(rhs);
    if (diff.positive()) return {std::strong_ordering::greater, CompareRoute::certified_log};
    if (diff.negative()) return {std::strong_ordering::less, CompareRoute::certified_log};
  }
  throw PrecisionExhausted("guarded power comparison undecided", budget);
}

inline bool operator>=(const PowerProduct& l, const PowerProduct& r) { return compare(l, r) != std::strong_ordering::less; }
inline bool operator>(const PowerProduct& l, const PowerProduct& r) { return compare(l, r) == std::strong_ordering::greater; }
inline bool operator<=(const PowerProduct& l, const PowerProduct& r) { return compare(l, r) != std::strong_ordering::greater; }
inline bool operator<(const PowerProduct& l, const PowerProduct& r) { return compare(l, r) == std::strong_ordering::less; }

}  // namespace thuediag
