#pragma once

#include <string>

#include "thuediag/algseq/lambda.hpp"

namespace thuediag::algseq {

namespace detail {

inline cert::Interval ipow_signed(const cert::Interval& a, long e) {
  return e >= 0 ? cert::pow(a, static_cast<unsigned long>(e)) : cert::inverse(cert::pow(a, static_cast<unsigned long>(-e)));
}

inline cert::Interval real_of(const QuadElem& q, long prec) { return cert::embed(q, prec).re; }

}  // namespace detail

/// |binom(n-g+1/r, n+1-g) binom(n-1/r, n)| / binom(2n+1-g, n).
inline Rational binomial_ratio(int n, int g, int r) {
  Rational a = binomial(Rational(n - g) + make_rational(1, r), static_cast<unsigned long>(n + 1 - g));
  Rational b = binomial(Rational(n) - make_rational(1, r), static_cast<unsigned long>(n));
  return abs(a * b) / Rational(binomial(static_cast<unsigned long>(2 * n + 1 - g), static_cast<unsigned long>(n)));
}

/// c1 h Z1^(nr+1-g) Z2^(1-r) + c2 h^(2n+1-g) Z1^(-r(n+1-g)+1-g) Z2, for Z1^r > 2h.
inline cert::Interval lambda_prime(const DiagForm& f, const Integer& h, const SolutionRecord& s1, const SolutionRecord& s2, int n,
                                   int g, long prec) {
  int r = f.r();
  cert::Interval m1 = detail::real_of(s1.z_pow_2r, prec), m2 = detail::real_of(s2.z_pow_2r, prec);
  cert::Interval z1 = cert::root(m1, 2 * r), z2 = cert::root(m2, 2 * r), z1r = cert::sqrt(m1);
  cert::Interval H(h, prec), one(1L, prec);
  cert::Interval cng = abs_cng(f, n, g, prec);
  cert::Interval shrink = one - cert::Interval(2L, prec) * H / z1r;
  if (!shrink.positive()) throw DomainError("lambda_prime needs Z1^r > 2h");
  cert::Interval c1 = cert::Interval(ipow(2, 3 * n + 2), prec) * cng;
  cert::Interval c2 = cert::Interval(ipow(2, n + 1 - g), prec) * cng *
                      cert::inverse(cert::sqrt(cert::pow(shrink, static_cast<unsigned long>(2 * n + 1 - g)))) *
                      cert::Interval(binomial_ratio(n, g, r), prec);
  cert::Interval t1 = c1 * H * detail::ipow_signed(z1, n * r + 1 - g) * detail::ipow_signed(z2, 1 - r);
  cert::Interval t2 = c2 * cert::pow(H, static_cast<unsigned long>(2 * n + 1 - g)) * detail::ipow_signed(z1, -r * (n + 1 - g) + 1 - g) * z2;
  return t1 + t2;
}

/// |Lambda| from the exact |Lambda|^2 or |Lambda|^(2r).
inline cert::Interval lambda_abs(const LambdaValue& l, long prec) {
  cert::Interval p = detail::real_of(l.abs_sq_power(), prec);
  return l.g == 0 ? cert::sqrt(p) : cert::root(p, 2 * l.r_of_root);
}

struct BoundVerdict {
  bool applicable = false;
  bool decided = false;
  bool pass = false;
  long bits = 0;
  std::string lhs, rhs;
};

struct PrimeVerdicts {
  BoundVerdict at_least_one;  // Lambda' >= 1
  BoundVerdict upper;         // |Lambda|, |Lambda~| <= Lambda'
};

/// Applies when zeta2 <= zeta1, Z1^r > 2h and Sigma_{n,g} != 0; the caller supplies a related pair.
inline PrimeVerdicts lambda_prime_check(const PairContext& c, const Integer& h, int n, int g, long budget = 0) {
  if (budget <= 0) budget = cert::default_bits_budget();
  PrimeVerdicts out;
  const DiagForm& f = c.form;
  bool ordered = quad_compare(c.sol2.zeta_sq, c.sol1.zeta_sq) != std::strong_ordering::greater;
  bool large = quad_compare(c.sol1.z_pow_2r, f.field_elem(Rational(4 * h * h))) == std::strong_ordering::greater;
  if (!ordered || !large) return out;
  LambdaValue l = lambda(c, n, g), lt = lambda_tilde(c, n, g);
  if (l.is_zero()) return out;
  out.at_least_one.applicable = out.upper.applicable = true;
  for (long prec = 64; prec <= budget; prec *= 2) {
    cert::Interval lp = lambda_prime(f, h, c.sol1, c.sol2, n, g, prec);
    if (!out.at_least_one.decided && (lp.ge(Rational(1)) || lp.lt(Rational(1)))) {
      out.at_least_one = {true, true, lp.ge(Rational(1)), prec, lp.str(), "1"};
    }
    if (!out.upper.decided) {
      cert::Interval a = lambda_abs(l, prec), b = lambda_abs(lt, prec);
      cert::Interval top = cert::hull(a, b);
      if (mpfr_cmp(top.hi(), lp.lo()) <= 0)
        out.upper = {true, true, true, prec, top.str(), lp.str()};
      else if (mpfr_cmp(a.lo(), lp.hi()) > 0 || mpfr_cmp(b.lo(), lp.hi()) > 0)
        out.upper = {true, true, false, prec, top.str(), lp.str()};
    }
    if (out.at_least_one.decided && out.upper.decided) break;
  }
  out.at_least_one.bits = std::max(out.at_least_one.bits, out.upper.bits);
  return out;
}

/// R(k) = (r-1)^(k-1).
inline Integer r_of_k(int r, int k) { return ipow(r - 1, static_cast<unsigned long>(k - 1)); }

/// (i7, i8) for a class of size k; requires R(k) - 2r - 1 > 0.
inline std::pair<Rational, Rational> induction_exponents(int r, int k) {
  Integer R = r_of_k(r, k);
  Integer den = R - 2 * r - 1;
  if (den <= 0) throw ParameterError("R(k) - 2r - 1 must be positive (r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")");
  return {make_rational(Integer(7 * r * r), den), make_rational(Integer(2 * R + r * r - 3 * r), den)};
}

/// |j| >= 2 r^(i7/r) h^(i8/r), decided on |j|^(2r) and cross-checked on |j|^(r(r-1)).
inline bool induction_hypothesis(const DiagForm& f, const Integer& h, int k) {
  if (k < 3) throw ParameterError("class size must be at least 3");
  if (h < 1) throw ParameterError("h must be positive");
  int r = f.r();
  auto [i7, i8] = induction_exponents(r, k);
  PowerProduct lhs, rhs;
  lhs.times(f.j_abs_2r(), Rational(1));
  rhs.times(2L, Rational(2 * r)).times(Integer(r), 2 * i7).times(h, 2 * i8);
  bool a = compare_guarded(lhs, rhs).order != std::strong_ordering::less;
  PowerProduct lhs2, rhs2;
  lhs2.times(abs(f.j_power()), Rational(1));
  rhs2.times(2L, Rational(r * (r - 1))).times(Integer(r), Rational(r - 1) * i7).times(h, Rational(r - 1) * i8);
  bool b = compare_guarded(lhs2, rhs2).order != std::strong_ordering::less;
  if (a != b) throw InconsistencyError("induction hypothesis routes disagree");
  return a;
}

/// Z_k >= Z_{k-1}^((n+1)r-1) / (2^(n+4) r^((3nr+2)/(r-2)) |j|^((nr+2)/(r-2)) h^(2n+1)), raised to the power 2r.
inline AuditCheck induction_step_check(const DiagForm& f, const Integer& h, const SolutionRecord& prev, const SolutionRecord& last, int n) {
  int r = f.r();
  PowerProduct lhs, rhs;
  lhs.times(last.z_pow_2r, Rational(1))
      .times(2L, Rational(2 * r * (n + 4)))
      .times(Integer(r), make_rational(2 * r * (3 * n * r + 2), r - 2))
      .times(f.j_abs_2r(), make_rational(n * r + 2, r - 2))
      .times(h, Rational(2 * r * (2 * n + 1)));
  rhs.times(prev.z_pow_2r, Rational((n + 1) * r - 1));
  GuardedOrdering o = compare_guarded(lhs, rhs);
  return {"induction_step", prev.key() + "->" + last.key() + " n=" + std::to_string(n), true, o.order != std::strong_ordering::less,
          lhs.str(), rhs.str(), o.route == CompareRoute::exact ? "exact" : "certified_log"};
}

/// The conclusion for consecutive members of one S'_omega list (descending zeta); vacuous below two members.
inline bool induction_conclusion_check(const DiagForm& f, const Integer& h, const std::vector<SolutionRecord>& list, int n) {
  if (list.size() < 2) return true;
  return induction_step_check(f, h, list[list.size() - 2], list.back(), n).pass;
}

}  // namespace thuediag::algseq
