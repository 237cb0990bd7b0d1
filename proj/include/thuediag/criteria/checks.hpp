#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thuediag/criteria/bounds.hpp"
#include "thuediag/criteria/omega.hpp"
#include "thuediag/solver.hpp"

namespace thuediag::criteria {

struct TraceEntry {
  std::string what;
  std::string lhs, relation, rhs;
  bool result = false;
  std::string route = "exact";
};

/// Solutions found by a search, together with a description of where the search looked.
struct Observed {
  std::vector<SolutionRecord> solutions;
  std::string region;
};

inline Observed observe_box(const DiagForm& f, const Integer& h, long x_bound, long y_bound) {
  return {enumerate_box(f, h, x_bound, y_bound), "box |x|<=" + std::to_string(x_bound) + ", 1<=y<=" + std::to_string(y_bound)};
}

inline Observed observe(const RelatedClassification& cls, std::string region) { return {cls.all(), std::move(region)}; }

struct TheoremVerdict {
  Theorem theorem = Theorem::T1_1;
  std::vector<std::pair<std::string, std::string>> params;
  bool hypothesis_holds = false;
  Integer bound;
  std::string bound_expr;
  long observed = 0;
  std::optional<bool> pass;  // set only when the hypothesis holds
  std::vector<TraceEntry> exact_trace;
  std::string region;
  std::string form_case;

  std::string id() const {
    std::string out = to_string(theorem);
    for (const auto& [k, v] : params)
      if (k == "l" || k == "epsilon" || (k == "m" && theorem != Theorem::C1_6)) out += "(" + k + "=" + v + ")";
    return out;
  }
  bool falsified() const { return pass.has_value() && !*pass; }
};

namespace detail {

inline std::string route_name(CompareRoute r) { return r == CompareRoute::exact ? "exact" : "certified_log"; }

/// lhs >= rhs (or > when strict), recorded in the verdict trace.
inline bool compare_step(TheoremVerdict& v, std::string what, const PowerProduct& lhs, const PowerProduct& rhs, bool strict = false) {
  GuardedOrdering o = compare_guarded(lhs, rhs);
  bool ok = strict ? o.order == std::strong_ordering::greater : o.order != std::strong_ordering::less;
  v.exact_trace.push_back({std::move(what), lhs.str(), strict ? ">" : ">=", rhs.str(), ok, route_name(o.route)});
  return ok;
}

inline void finish(TheoremVerdict& v, const Bound& b) {
  v.bound = b.value;
  v.bound_expr = b.expr;
  if (v.hypothesis_holds) v.pass = Integer(v.observed) <= v.bound;
}

inline TheoremVerdict start(Theorem t, const DiagForm& f, const Integer& h, const Observed& obs) {
  TheoremVerdict v;
  v.theorem = t;
  v.params = {{"h", h.get_str()}, {"r", std::to_string(f.r())}};
  v.region = obs.region;
  v.form_case = to_string(form_case(f));
  v.observed = static_cast<long>(obs.solutions.size());
  return v;
}

inline void need(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

/// |j| >= 1, decided on |j|^(r(r-1)) and on |j|^(2r).
inline bool j_at_least_one(TheoremVerdict& v, const DiagForm& f) {
  bool a = abs(f.j_power()) >= 1, b = f.j_abs_2r() >= 1;
  if (a != b) throw InconsistencyError("|j| >= 1 routes disagree");
  v.exact_trace.push_back({"|j| >= 1", "|j|^(r(r-1)) = " + Rational(abs(f.j_power())).get_str(), ">=", "1", a, "exact"});
  return a;
}

// Delta' >= r^e1 h^e2 on the exact rational Delta'.
inline bool delta_prime_at_least(TheoremVerdict& v, const DiagForm& f, const Integer& h, const Rational& e1, const Rational& e2,
                                 bool strict = false) {
  PowerProduct lhs, rhs;
  lhs.times(delta_prime(f, h), Rational(1));
  rhs.times(Integer(f.r()), e1).times(h, e2);
  return compare_step(v, "Delta' vs threshold", lhs, rhs, strict);
}

}  // namespace detail

/// (alpha1, alpha2) for a given m; requires (r-1)^(m-1) - 2r - 1 > 0.
inline std::pair<Rational, Rational> alpha_exponents(int r, int m) {
  Integer den = ipow(r - 1, static_cast<unsigned long>(m - 1)) - 2 * r - 1;
  if (den <= 0) throw ParameterError("(r-1)^(m-1) - 2r - 1 must be positive");
  return {make_rational(Integer(7 * r * r * (r - 1)), den), make_rational(Integer((r - 1) * (r * r + r + 2)), den)};
}

inline TheoremVerdict check_T1_3(const DiagForm& f, const Integer& h, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 6, "T1_3 needs r >= 6");
  TheoremVerdict v = detail::start(Theorem::T1_3, f, h, obs);
  Integer den(r * r - 5 * r - 2);
  v.hypothesis_holds = detail::delta_prime_at_least(v, f, h, make_rational(Integer(13 * r * r * (r - 1)), den),
                                                    make_rational(Integer(4 * (r - 1) * (r * r - r + 2)), den));
  detail::finish(v, bound_table(Theorem::T1_3, form_case(f), r));
  return v;
}

inline TheoremVerdict check_T1_4(const DiagForm& f, const Integer& h, int m, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 5 && m >= 3, "T1_4 needs r >= 5 and m >= 3");
  TheoremVerdict v = detail::start(Theorem::T1_4, f, h, obs);
  v.params.push_back({"m", std::to_string(m)});
  auto [a1, a2] = alpha_exponents(r, m);
  v.hypothesis_holds = detail::delta_prime_at_least(v, f, h, a1, a2);
  detail::finish(v, bound_table(Theorem::T1_4, form_case(f), r, m));
  return v;
}

inline TheoremVerdict check_C1_5(const DiagForm& f, const Integer& h, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 5, "C1_5 needs r >= 5");
  TheoremVerdict v = detail::start(Theorem::C1_5, f, h, obs);
  v.hypothesis_holds = detail::delta_prime_at_least(v, f, h, make_rational(Integer(7 * r * (r - 1)), Integer(r - 4)),
                                                    make_rational(Integer((r - 1) * (r * r + r + 2)), Integer(r * (r - 4))));
  detail::finish(v, bound_table(Theorem::C1_5, form_case(f), r));
  return v;
}

/// c_l in the exponent of the l-indexed count.
inline Rational count_exponent_constant(int l) {
  switch (l) {
    case 1: return Rational(45) + Rational(593, 913);
    case 2: return Rational(6) + Rational(134, 4583);
    case 3: return Rational(75) + Rational(156, 167);
    default: throw ParameterError("l must be 1, 2 or 3");
  }
}

inline TheoremVerdict check_T2_1(const DiagForm& f, const Integer& h, int l, const Observed& obs) {
  int r = f.r();
  Rational c = count_exponent_constant(l);
  detail::need(r >= 6 - l, "T2_1 needs r >= 6 - l");
  TheoremVerdict v = detail::start(Theorem::T2_1, f, h, obs);
  v.params.push_back({"l", std::to_string(l)});
  // (r^4 h)^(c_l r^(2-l))
  Rational e = c * (l <= 2 ? Rational(ipow(r, static_cast<unsigned long>(2 - l))) : Rational(1, r));
  v.hypothesis_holds = detail::delta_prime_at_least(v, f, h, 4 * e, e, true);
  detail::finish(v, bound_table(Theorem::T2_1, form_case(f), r, l));
  return v;
}

/// (r^2+r+2) / (4(r-1)[(r-1)^(m-1) - 2r - 1]), the lower end of the epsilon window.
inline Rational epsilon_floor(int r, int m) {
  Integer den = ipow(r - 1, static_cast<unsigned long>(m - 1)) - 2 * r - 1;
  if (den <= 0) throw ParameterError("(r-1)^(m-1) - 2r - 1 must be positive");
  return make_rational(Integer(r * r + r + 2), 4 * (r - 1) * den);
}

/// Smallest m >= 3 whose window contains epsilon.
inline int epsilon_m(int r, const Rational& eps) {
  if (eps <= 0 || eps >= make_rational(1, 2 * (r - 1))) throw ParameterError("epsilon must lie in (0, 1/(2(r-1)))");
  for (int m = 3;; ++m)
    if (ipow(r - 1, static_cast<unsigned long>(m - 1)) - 2 * r - 1 > 0 && epsilon_floor(r, m) < eps) return m;
}

/// ceil(log(q) / log(base)) for q > 0, base >= 2. Interval logs are refined until one integer is left;
/// a candidate sitting on an exact power is settled by rational arithmetic.
inline Integer ceil_log_ratio(const Rational& q, int base, long budget = 0, bool* on_power = nullptr) {
  if (q <= 0 || base < 2) throw ParameterError("ceil_log_ratio needs q > 0 and base >= 2");
  if (budget <= 0) budget = cert::default_bits_budget();
  for (long prec = 64; prec <= budget; prec *= 2) {
    cert::Interval x = cert::log(cert::Interval(q, prec)) / cert::log(cert::Interval(long(base), prec));
    Integer lo_floor, hi_ceil;
    mpfr_get_z(lo_floor.get_mpz_t(), x.lo(), MPFR_RNDD);
    mpfr_get_z(hi_ceil.get_mpz_t(), x.hi(), MPFR_RNDU);
    bool lo_is_int = mpfr_integer_p(x.lo());
    // the interval sits inside (n, n+1]
    if (!lo_is_int && hi_ceil == lo_floor + 1) return hi_ceil;
    Integer k = lo_is_int ? lo_floor : lo_floor + 1;
    if (hi_ceil - k <= 1 && k.fits_slong_p() && q == qpow(Rational(base), k.get_si())) {
      if (on_power) *on_power = true;
      return k;
    }
  }
  throw PrecisionExhausted("ceiling of a log ratio undecided", budget);
}

inline TheoremVerdict check_C1_6(const DiagForm& f, const Integer& h, const Rational& eps, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 5, "C1_6 needs r >= 5");
  int m = epsilon_m(r, eps);
  TheoremVerdict v = detail::start(Theorem::C1_6, f, h, obs);
  v.params.push_back({"epsilon", eps.get_str()});
  v.params.push_back({"m", std::to_string(m)});
  v.exact_trace.push_back({"epsilon window", epsilon_floor(r, m).get_str(), "<", eps.get_str(), true, "exact"});
  // h 2^(r/2) r^7 <= |Delta|^(1/(2(r-1)) - eps)
  PowerProduct lhs, rhs;
  lhs.times(Integer(abs(discriminant(f).value)), Rational(make_rational(1, 2 * (r - 1)) - eps));
  rhs.times(h, Rational(1)).times(2L, make_rational(r, 2)).times(Integer(r), Rational(7));
  v.hypothesis_holds = detail::compare_step(v, "|Delta|^(1/(2(r-1))-eps) vs h 2^(r/2) r^7", lhs, rhs);
  if (f.D() < 0) {
    // here the count is (4 + ceil(log(1/(4 eps))/log(r-1))) r, the D<0 row with that m
    bool on_power = false;
    Integer c = ceil_log_ratio(1 / (4 * eps), r - 1, 0, &on_power);
    v.exact_trace.push_back({"ceil(log(1/(4 eps))/log(r-1))", c.get_str(), "=", "ceiling", true, on_power ? "exact" : "certified_log"});
    v.params.back().second = Integer(4 + c).get_str();
    detail::finish(v, bound_table(Theorem::C1_6, FormCase::d_negative, r, static_cast<int>(Integer(4 + c).get_si())));
  } else {
    detail::finish(v, bound_table(Theorem::C1_6, form_case(f), r, m));
  }
  return v;
}

/// Y_L exponents (i1, i2, i3); i3 depends on whether |j| >= 1.
inline std::tuple<Rational, Rational, Rational> yl_exponents(int r, int m, bool j_ge_1) {
  Integer R = ipow(r - 1, static_cast<unsigned long>(m - 1));
  Rational i1 = 2 + make_rational(2, r);
  Rational i2 = make_rational(1, r - 2) + make_rational(Integer(r - 3), (r - 2) * R);
  Rational i3 = j_ge_1 ? Rational(0) : make_rational(r, 2 * (r - 2));
  return {i1, i2, i3};
}

inline TheoremVerdict check_T1_7(const DiagForm& f, const Integer& h, int m, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 6 && m >= 2, "T1_7 needs r >= 6 and m >= 2");
  if (f.D() >= 0 || !f.is_reduced()) throw DomainError("T1_7 needs a reduced form with D < 0");
  TheoremVerdict v = detail::start(Theorem::T1_7, f, h, obs);
  v.params.push_back({"m", std::to_string(m)});
  auto [i1, i2, i3] = yl_exponents(r, m, detail::j_at_least_one(v, f));
  // |y| >= r^i1 h^i2 |j|^(-i3), with |j| = (|j|^(2r))^(1/(2r))
  PowerProduct yl;
  yl.times(Integer(r), i1).times(h, i2);
  if (i3 != 0) yl.times(f.j_abs_2r(), -i3 / (2 * r));
  v.hypothesis_holds = true;
  long count = 0;
  for (const auto& s : obs.solutions) {
    if (s.y == 0) continue;
    PowerProduct lhs;
    lhs.times(Integer(abs(s.y)), Rational(1));
    count += detail::compare_step(v, "|y| >= Y_L at " + s.key(), lhs, yl);
  }
  v.observed = count;
  detail::finish(v, bound_table(Theorem::T1_7, form_case(f), r, m));
  return v;
}

inline std::tuple<Rational, Rational, Rational> hl_exponents(int r, int m, bool j_ge_1) {
  Integer R = ipow(r - 1, static_cast<unsigned long>(m - 1));
  Rational i4 = 5 + make_rational(Integer(11 * r - 3), R);
  Rational i5 = 2 + make_rational(Integer(2 * (r - 3)), R);
  Rational i6 = j_ge_1 ? Rational(2) : make_rational(Integer(2), (r - 3) * R);
  return {i4, i5, i6};
}

inline TheoremVerdict check_T1_8(const DiagForm& f, const Integer& h, int m, const Observed& obs) {
  int r = f.r();
  detail::need(r >= 5 && m >= 3, "T1_8 needs r >= 5 and m >= 3");
  TheoremVerdict v = detail::start(Theorem::T1_8, f, h, obs);
  v.params.push_back({"m", std::to_string(m)});
  auto [i4, i5, i6] = hl_exponents(r, m, detail::j_at_least_one(v, f));
  PowerProduct hl;
  hl.times(Integer(r), i4).times(h, i5).times(f.j_abs_2r(), i6 / (2 * r));
  v.hypothesis_holds = true;
  long count = 0;
  for (const auto& s : obs.solutions) {
    if (s.hessian == 0) continue;
    PowerProduct lhs;
    lhs.times(Integer(abs(s.hessian)), Rational(1));
    count += detail::compare_step(v, "|H| >= H_L at " + s.key(), lhs, hl);
  }
  v.observed = count;
  detail::finish(v, bound_table(Theorem::T1_8, form_case(f), r, m));
  return v;
}

inline TheoremVerdict check_T1_9(const DiagForm& f, const Integer& h, const Observed& obs, long factor_budget = 1L << 22) {
  int r = f.r();
  detail::need(r >= 5, "T1_9 needs r >= 5");
  TheoremVerdict v = detail::start(Theorem::T1_9, f, h, obs);
  Integer delta = discriminant(f).value;
  Integer g = gcd(h, delta);
  v.exact_trace.push_back({"gcd(h, Delta) = 1", g.get_str(), "=", "1", g == 1, "exact"});
  PowerProduct lhs, rhs;
  lhs.times(Integer(abs(delta)), Rational(1));
  rhs.times(2L, Rational(r * r - r)).times(Integer(r), r + make_rational(7 * r * (r - 1), r - 4));
  bool big = detail::compare_step(v, "|Delta| vs 2^(r^2-r) r^(r+7r(r-1)/(r-4))", lhs, rhs);
  v.hypothesis_holds = g == 1 && big;
  v.observed = 0;
  for (const auto& s : obs.solutions) v.observed += abs(s.f_value) == h;
  int w = omega(h, factor_budget);
  v.params.push_back({"omega_h", std::to_string(w)});
  detail::finish(v, bound_table(Theorem::T1_9, form_case(f), r, 0, w));
  return v;
}

/// Positive solutions of the binomial inequality, certified up to y_max by convergents.
inline Observed observe_binomial(const Integer& a, const Integer& b, int r, const Integer& c, const Integer& y_max) {
  ConvergentSearch cs = enumerate_binomial_convergents(a, b, r, c, y_max);
  return {cs.solutions, "positive quadrant, y<=" + y_max.get_str() + " (convergents beyond y=" + cs.crossover.get_str() + ")"};
}

inline TheoremVerdict binomial_start(Theorem t, const Integer& a, const Integer& b, const Integer& c, int r, const Observed& obs) {
  TheoremVerdict v;
  v.theorem = t;
  v.params = {{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}, {"r", std::to_string(r)}};
  v.region = obs.region;
  v.form_case = "binomial";
  return v;
}

inline TheoremVerdict check_T1_1(const Integer& a, const Integer& b, const Integer& c, int r, const Observed& obs) {
  detail::need(a >= 1 && b >= 1 && c >= 1 && r >= 5, "T1_1 needs a, b, c >= 1 and r >= 5");
  TheoremVerdict v = binomial_start(Theorem::T1_1, a, b, c, r, obs);
  PowerProduct lhs, rhs;
  lhs.times(Integer(a * b), Rational(1));
  rhs.times(2L, Rational(r))
      .times(Integer(r), make_rational(7 * r, r - 4))
      .times(c, 2 + make_rational(r * r + r + 2, r * (r - 4)));
  v.hypothesis_holds = detail::compare_step(v, "ab vs 2^r r^(7r/(r-4)) c^(2+(r^2+r+2)/(r(r-4)))", lhs, rhs);
  v.observed = static_cast<long>(obs.solutions.size());
  detail::finish(v, bound_table(Theorem::T1_1, FormCase::odd_indefinite, r));
  return v;
}

inline TheoremVerdict check_T1_1(const Integer& a, const Integer& b, const Integer& c, int r, const Integer& y_max) {
  return check_T1_1(a, b, c, r, observe_binomial(a, b, r, c, y_max));
}

// The first threshold exponent 182.6 r/(r-1), taken as stated; the l = 1 count uses 183.6 r.
inline Rational t12_strong_exponent(int r) { return Rational(1826, 10) * make_rational(r, r - 1); }

inline TheoremVerdict check_T1_2(const Integer& a, const Integer& b, const Integer& c, int r, const Observed& obs,
                                 long factor_budget = 1L << 22) {
  detail::need(a >= 1 && b >= 1 && c >= 1 && r >= 5, "T1_2 needs a, b, c >= 1 and r >= 5");
  TheoremVerdict v = binomial_start(Theorem::T1_2, a, b, c, r, obs);
  Integer g = gcd(c, Integer(r * a * b));
  v.exact_trace.push_back({"gcd(c, rab) = 1", g.get_str(), "=", "1", g == 1, "exact"});
  PowerProduct lhs, strong, weak;
  lhs.times(Integer(a * b), Rational(1));
  strong.times(2L, Rational(r)).times(Integer(r), t12_strong_exponent(r));
  weak.times(2L, Rational(r)).times(Integer(r), make_rational(7 * r, r - 4));
  bool s = detail::compare_step(v, "ab vs 2^r r^(182.6r/(r-1))", lhs, strong);
  bool w = s || detail::compare_step(v, "ab vs 2^r r^(7r/(r-4))", lhs, weak);
  v.hypothesis_holds = g == 1 && w;
  v.observed = 0;
  for (const auto& sol : obs.solutions) v.observed += sol.f_value == c;
  int om = omega(c, factor_budget);
  v.params.push_back({"omega_c", std::to_string(om)});
  detail::finish(v, bound_table(Theorem::T1_2, FormCase::odd_indefinite, r, s ? 2 : 3, om));
  return v;
}

inline TheoremVerdict check_T1_2(const Integer& a, const Integer& b, const Integer& c, int r, const Integer& y_max) {
  return check_T1_2(a, b, c, r, observe_binomial(a, b, r, c, y_max));
}

}  // namespace thuediag::criteria
