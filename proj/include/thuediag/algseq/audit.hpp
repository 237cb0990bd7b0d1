#pragma once

#include "thuediag/algseq/bounds.hpp"

namespace thuediag::algseq {

struct PairAuditOptions {
  int n_max = 3;
  size_t max_pairs_per_class = 200;
  long budget = 0;
  bool large_only = false;  // only pairs with Z1^r > 2h
  bool include_diagonal = false;
};

struct PairAuditStats {
  long pairs = 0;
  long skipped_zero_xy = 0;
  long sigma_zero = 0;
  long nonvanishing_interval_undecided = 0;
  // square D: Sigma != 0 with Sigma~ = 0, where Lambda and Lambda~ are not conjugate
  long square_field_one_sided = 0;
};

namespace detail {

inline std::string pair_subject(const SolutionRecord& a, const SolutionRecord& b, int n, int g) {
  return a.key() + "|" + b.key() + " n=" + std::to_string(n) + " g=" + std::to_string(g);
}

inline void push(AuditReport& rep, std::string name, std::string subject, bool pass, std::string lhs = "", std::string rhs = "",
                 std::string route = "exact") {
  rep.checks.push_back({std::move(name), std::move(subject), true, pass, std::move(lhs), std::move(rhs), std::move(route)});
}

inline void audit_pair(AuditReport& rep, PairAuditStats& st, const PairContext& c, const Integer& h, const PairAuditOptions& o) {
  const DiagForm& f = c.form;
  bool square = is_perfect_square(f.D());
  for (int n = 1; n <= o.n_max; ++n) {
    for (int g = 0; g <= 1; ++g) {
      std::string subj = pair_subject(c.sol1, c.sol2, n, g);
      LambdaValue l = lambda(c, n, g), lt = lambda_tilde(c, n, g);
      QuadElem p = l.field_power(), pt = lt.field_power();
      push(rep, "lambda_integral", subj, p.is_algebraic_integer() && pt.is_algebraic_integer(), p.str(), pt.str());
      if (!square) push(rep, "lambda_conjugate", subj, pt == p.conj() || pt == -p.conj(), p.str(), pt.str());
      if (f.D() < 0) push(rep, "lambda_modulus", subj, abs_sq(p) == abs_sq(pt), abs_sq(p).str(), abs_sq(pt).str());
      cert::Complex def = lambda_by_definition(c, n, g, 256), ex = l.value(256);
      push(rep, "lambda_routes", subj, overlaps(def, ex), def.re.str(), ex.re.str(), "certified");
      QuadElem one = f.field_elem(Rational(1));
      if (l.is_zero()) {
        ++st.sigma_zero;
      } else if (square && lt.is_zero()) {
        ++st.square_field_one_sided;
      } else {
        QuadElem prod = product_abs_sq_power(l, lt);
        push(rep, "lambda_product", subj, quad_compare(prod, one) != std::strong_ordering::less, prod.str(), "1");
      }
      if (square && !l.is_zero())
        push(rep, "lambda_self", subj, quad_compare(l.abs_sq_power(), one) != std::strong_ordering::less, l.abs_sq_power().str(), "1");
      PrimeVerdicts pv = lambda_prime_check(c, h, n, g, o.budget);
      for (auto [name, v] : {std::pair{"lambda_prime", &pv.at_least_one}, std::pair{"lambda_upper", &pv.upper}})
        if (v->applicable) rep.checks.push_back({name, subj, v->decided, v->pass, v->lhs, v->rhs, "certified"});
    }
    for (int I = 0; I <= 1; ++I) {
      NonvanishingResult nv = nonvanishing_check(c, n, I, o.budget);
      st.nonvanishing_interval_undecided += !nv.interval_confirms;
      push(rep, "nonvanishing", pair_subject(c.sol1, c.sol2, n, I), nv.status != Vanishing::both_zero, to_string(nv.status), "",
           nv.interval_confirms ? "exact+certified" : "exact");
    }
  }
}

}  // namespace detail

/// Pairwise checks inside every related class, plus the induction step wherever its hypothesis holds.
inline AuditReport pair_audit(const DiagForm& f, const Integer& h, const RelatedClassification& cls, const PairAuditOptions& o = {},
                              PairAuditStats* stats = nullptr) {
  AuditReport rep;
  PairAuditStats st;
  for (const auto& [k, grp] : cls.groups) {
    size_t done = 0;
    // smallest zeta first: those pairs meet the Z1^r > 2h condition when the cap binds
    for (size_t j = grp.size(); j-- > (o.include_diagonal ? 0 : 1) && done < o.max_pairs_per_class;)
      for (size_t i = o.include_diagonal ? j + 1 : j; i-- > 0 && done < o.max_pairs_per_class;) {
        if (o.large_only && quad_compare(grp[i].z_pow_2r, f.field_elem(Rational(4 * h * h))) != std::strong_ordering::greater) continue;
        try {
          PairContext c = make_pair_context(f, grp[i], grp[j]);
          ++st.pairs;
          ++done;
          detail::audit_pair(rep, st, c, h, o);
        } catch (const DomainError&) {
          ++st.skipped_zero_xy;
        }
      }
    std::vector<SolutionRecord> sp = cls.reduced(k);
    if (f.r() >= 5 && sp.size() >= 3 && induction_hypothesis(f, h, static_cast<int>(sp.size())))
      for (int n = 1; n <= o.n_max; ++n) rep.checks.push_back(induction_step_check(f, h, sp[sp.size() - 2], sp.back(), n));
  }
  if (stats) *stats = st;
  return rep;
}

}  // namespace thuediag::algseq
