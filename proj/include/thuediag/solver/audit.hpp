#pragma once

#include <string>
#include <vector>

#include "thuediag/solver/classify.hpp"

namespace thuediag {

struct AuditCheck {
  std::string name;
  std::string subject;
  bool decided = true;
  bool pass = true;
  std::string lhs, rhs;
  std::string route = "exact";
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  int falsifications() const {
    int n = 0;
    for (const auto& c : checks) n += c.decided && !c.pass;
    return n;
  }
  int undecided() const {
    int n = 0;
    for (const auto& c : checks) n += !c.decided;
    return n;
  }
  int count(const std::string& name) const {
    int n = 0;
    for (const auto& c : checks) n += c.name == name;
    return n;
  }
};

namespace detail {

inline const char* route_name(CompareRoute r) { return r == CompareRoute::exact ? "exact" : "certified_log"; }

inline void ge_check(AuditReport& rep, const std::string& name, const std::string& subject, const PowerProduct& lhs,
                     const PowerProduct& rhs, bool strict = false) {
  GuardedOrdering o = compare_guarded(lhs, rhs);
  bool pass = strict ? o.order == std::strong_ordering::greater : o.order != std::strong_ordering::less;
  rep.checks.push_back({name, subject, true, pass, lhs.str(), rhs.str(), route_name(o.route)});
}

inline QuadElem qe(const Rational& q, const Integer& d) { return QuadElem(q, d); }

/// Largest integer nu with J > 2^(2r+2nu) h^4, or nullopt below -64.
inline std::optional<long> nu_max(const Rational& J, int r, const Integer& h) {
  Rational base = J / Rational(ipow(2, 2 * r) * ipow(h, 4));
  // J' > 4^nu
  long nu = (bit_length(base.get_num()) - bit_length(base.get_den())) / 2 + 1;
  auto holds = [&](long v) { return base > (v >= 0 ? Rational(ipow(4, v)) : Rational(1) / Rational(ipow(4, -v))); };
  while (nu > -64 && !holds(nu)) --nu;
  while (holds(nu + 1)) ++nu;
  if (!holds(nu)) return std::nullopt;
  return nu;
}

inline cert::Complex related_ratio(const DiagForm& f, const SolutionRecord& s, long prec) {
  QuadElem scale = f.u().scale / f.v().scale;
  cert::Complex rho = cert::principal_root(scale, f.r(), prec);
  return rho * cert::embed(f.linear_u(s.x, s.y), prec) / cert::embed(f.linear_v(s.x, s.y), prec);
}

inline cert::Complex root_of_unity(int k, int r, long prec) {
  cert::Interval phi = cert::Interval::pi(prec + 16) * cert::Interval(make_rational(2 * k, r), prec + 16);
  return {cert::cos(phi), cert::sin(phi)};
}

}  // namespace detail

/// Distance from u/v to its related root against the zeta-proportional bounds; certified intervals.
inline void root_distance_checks(AuditReport& rep, const DiagForm& f, const RelatedClassification& cls, long budget) {
  int r = f.r();
  for (const auto& [k, g] : cls.groups)
    for (const auto& s : g) {
      if (s.v_zero || s.xi.is_zero()) continue;
      if (f.D() > 0 && !s.zeta_lt_one()) continue;
      bool strict = f.D() < 0 && s.zeta_lt_one();
      AuditCheck c{"root_distance", s.key(), false, false, "|omega - u/v|^2", "", "interval"};
      for (long prec = 128; prec <= budget; prec *= 2) {
        cert::Complex diff = detail::root_of_unity(k, r, prec) - detail::related_ratio(f, s, prec);
        cert::Interval lhs = diff.abs_sq();
        cert::Interval zeta2 = cert::embed(s.zeta_sq, prec).re;
        cert::Interval rhs(prec);
        if (f.D() < 0) {
          cert::Interval c0 = cert::Interval::pi(prec) * cert::Interval(make_rational(1, (strict ? 3 : 2) * r), prec);
          rhs = c0 * c0 * zeta2;
          c.rhs = strict ? "(pi/(3r))^2 zeta^2" : "(pi/(2r))^2 zeta^2";
        } else {
          cert::Interval ratio = cert::embed(s.z_pow_2r / s.eta_abs_sq, prec).re;
          rhs = cert::root(ratio, r) * zeta2;
          c.rhs = "(Z/|v|)^2 zeta^2";
        }
        cert::Interval d = rhs - lhs;
        if (d.positive() || (!strict && mpfr_sgn(d.lo()) >= 0)) {
          c.decided = c.pass = true;
          break;
        }
        if (d.negative()) {
          c.decided = true;
          c.pass = false;
          break;
        }
      }
      rep.checks.push_back(c);
    }
}

/// Exact audit of the gap principles on a classified solution set.
inline AuditReport gap_audit(const DiagForm& f, const Integer& h, const RelatedClassification& cls, long budget = 0) {
  if (budget <= 0) budget = cert::default_bits_budget();
  AuditReport rep;
  int r = f.r();
  const Integer& D = f.D();
  Rational J = f.j_abs_2r();
  Rational two_h = Rational(2 * h);

  // consecutive elements of every S'_omega
  for (const auto& [k, g] : cls.groups) {
    auto sp = cls.reduced(k);
    if (sp.size() < 2) continue;
    std::string grp = "k=" + std::to_string(k) + ":";
    for (size_t i = 1; i < sp.size(); ++i) {
      if (!sp[i - 1].zeta_lt_one()) continue;
      PowerProduct lhs, rhs;
      lhs.times(sp[i].z_pow_2r, 1);
      rhs.times(J, 1).times(two_h, -2 * r).times(sp[i - 1].z_pow_2r, r - 1);
#ifdef THUEDIAG_FAULT_GAP_FLIP
      detail::ge_check(rep, "gap_principle", grp + sp[i - 1].key() + "->" + sp[i].key(), rhs, lhs);
#else
      detail::ge_check(rep, "gap_principle", grp + sp[i - 1].key() + "->" + sp[i].key(), lhs, rhs);
#endif
    }
    // iterated form over every prefix whose earlier members have zeta < 1
    for (size_t m = 1; m < sp.size(); ++m) {
      if (!sp[m - 1].zeta_lt_one()) break;
      Integer R = ipow(r - 1, m);  // R(k) with k = m + 1
      if (!R.fits_slong_p() || R > 4096) break;
      long Rl = R.get_si();
      PowerProduct lhs, rhs;
      lhs.times(sp[m].z_pow_2r, r - 2);
      rhs.times(J, Rl - 1).times(two_h, -2 * r * (Rl - 1)).times(sp[0].z_pow_2r, Rl * (r - 2));
      detail::ge_check(rep, "chained_gap", grp + "k'=" + std::to_string(m + 1), lhs, rhs);
    }
    // every member of S'_omega is far out
    for (const auto& s : sp) {
      PowerProduct lhs, rhs;
      lhs.times(s.z_pow_2r, 1);
      rhs.times(J, 1).times(2, -2 * r).times(h, -2);
      detail::ge_check(rep, "class_lower_bound", grp + s.key(), lhs, rhs);
    }
  }

  // zeta below 1/2 once enough small-zeta members share a class
  for (const auto& [k, g] : cls.groups) {
    std::vector<const SolutionRecord*> small;
    for (const auto& s : g)
      if (s.zeta_lt_one()) small.push_back(&s);
    for (size_t t = 3; t <= small.size(); ++t) {
      Integer R = ipow(r - 1, t - 2);
      if (R > 4096) break;
      long Rl = R.get_si();
      PowerProduct hl, hr;
      hl.times(J, Rl - 1);
      hr.times(2, 2 * r * (Rl - 1) + 2 * (r - 2)).times(h, 4 * (Rl - 1));
      if (compare_guarded(hl, hr).order != std::strong_ordering::greater) continue;
      const SolutionRecord& s = *small[t - 2];
      bool pass = quad_compare(s.zeta_sq, detail::qe(Rational(1, 4), D)) == std::strong_ordering::less;
      rep.checks.push_back({"class_half_zeta", "k=" + std::to_string(k) + ":t=" + std::to_string(t), true, pass, "zeta^2=" + s.zeta_sq.str(), "1/4"});
    }
  }

  // comparisons against the overall largest zeta
  auto all = cls.all();
  if (!all.empty()) {
    std::sort(all.begin(), all.end(), zeta_before);
    const SolutionRecord& top = all.front();
    bool top_big = top.zeta_ge_one();
    auto nu = detail::nu_max(J, r, h);
    for (size_t i = 1; i < all.size(); ++i) {
      const auto& s = all[i];
      PowerProduct lhs, rhs;
      lhs.times(s.z_pow_2r, 1);
      rhs.times(J, Rational(1, 2)).times(2, -r).times(h, -2);
      detail::ge_check(rep, "far_from_max", s.key(), lhs, rhs);
      if (!top_big) continue;
      PowerProduct rhs2;
      rhs2.times(J, 1).times(2, -2 * r).times(h, -2);
      detail::ge_check(rep, "far_from_max_large_zeta", s.key(), lhs, rhs2);
      if (nu) {
        Rational bound = *nu >= 0 ? Rational(1) / Rational(ipow(4, *nu)) : Rational(ipow(4, -*nu));
        bool pass = quad_compare(s.zeta_sq, detail::qe(bound, D)) == std::strong_ordering::less;
        rep.checks.push_back({"zeta_decay", s.key() + ":nu=" + std::to_string(*nu), true, pass, "zeta^2=" + s.zeta_sq.str(), bound.get_str()});
      }
    }
  }

  if (f.is_definite()) {
    for (const auto& s : all) rep.checks.push_back({"definite_zeta", s.key(), true, !s.zeta_lt_one(), "zeta^2=" + s.zeta_sq.str(), "1"});
    if (J > Rational(ipow(2, 2 * r) * ipow(h, 4)))
      rep.checks.push_back({"definite_unique", "count", true, all.size() <= 1, std::to_string(all.size()), "1"});
  }

  if (D > 0) {
    std::vector<int> idx;
    for (const auto& [k, g] : cls.groups)
      for (const auto& s : g)
        if (s.zeta_lt_one() && std::find(idx.begin(), idx.end(), k) == idx.end()) idx.push_back(k);
    bool pass = r % 2 ? idx.size() <= 1 : (idx.size() <= 1 || (idx.size() == 2 && (idx[1] - idx[0]) * 2 == r));
    std::string seen;
    for (int k : idx) seen += (seen.empty() ? "" : ",") + std::to_string(k);
    rep.checks.push_back({"positive_d_classes", "classes", true, pass, "{" + seen + "}", r % 2 ? "one class" : "omega or -omega"});
  }

  if (f.is_reduced()) {
    for (const auto& s : all) {
      if (s.y == 0) continue;
      // |xi|^4 2^(4r) >= (chi^r)^2 y^(4r) |3D|^r
      Rational lhs = (s.xi_abs_sq * s.xi_abs_sq).rational() * Rational(ipow(2, 4 * r));
      Rational rhs = f.chi_r() * f.chi_r() * Rational(ipow(s.y, 4 * r)) * Rational(ipow(abs(3 * D), r));
      rep.checks.push_back({"reduced_lower_bound", s.key(), true, lhs >= rhs, lhs.get_str(), rhs.get_str()});
    }
  }

  root_distance_checks(rep, f, cls, budget);
  return rep;
}

}  // namespace thuediag
