#pragma once

#include <string>

#include "thuediag/pade.hpp"
#include "thuediag/solver.hpp"

namespace thuediag::algseq {

// One of the two linear powers, seen through its exact pieces: value^r = scale * lin^r.
struct Branch {
  bool is_u = true;
  QuadElem scale;
  QuadElem lin1, lin2;
};

/// Two solutions with the (X, Y) role assignment: X is u when Z1 = |u1|, else v.
struct PairContext {
  DiagForm form;
  SolutionRecord sol1, sol2;
  bool swapped = false;
  Branch X, Y;
  QuadElem x1r, y1r;  // X1^r, Y1^r
  QuadElem z1, zt1;   // 1 - Y1^r/X1^r, 1 - X1^r/Y1^r
};

inline PairContext make_pair_context(const DiagForm& f, const SolutionRecord& s1, const SolutionRecord& s2) {
  PairContext c{f, s1, s2, false, {}, {}, {}, {}, {}, {}};
  // |xi1| >= |eta1| means Z1 = |u1|
  c.swapped = quad_compare(s1.xi_abs_sq, s1.eta_abs_sq) == std::strong_ordering::less;
  Branch u{true, f.u().scale, f.linear_u(s1.x, s1.y), f.linear_u(s2.x, s2.y)};
  Branch v{false, f.v().scale, f.linear_v(s1.x, s1.y), f.linear_v(s2.x, s2.y)};
  c.X = c.swapped ? v : u;
  c.Y = c.swapped ? u : v;
  for (const auto* b : {&c.X, &c.Y})
    if (b->lin1.is_zero() || b->lin2.is_zero()) throw DomainError("X1 Y1 X2 Y2 must be nonzero for " + s1.key() + ", " + s2.key());
  c.x1r = c.X.scale * c.X.lin1.pow(f.r());
  c.y1r = c.Y.scale * c.Y.lin1.pow(f.r());
  QuadElem one = f.field_elem(Rational(1));
  c.z1 = one - c.y1r / c.x1r;
  c.zt1 = one - c.x1r / c.y1r;
  return c;
}

inline QuadElem eval(const pade::Poly& p, const QuadElem& z) {
  QuadElem acc(Rational(0), z.d());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + QuadElem(*it, z.d());
  return acc;
}

/// The exact pieces of c_{n,g} = r^n (r(r-1) sqrt D)^(n+g) (2/chi)^(1-g).
struct CngData {
  Integer r_pow;         // r^n
  Integer rr1_pow;       // (r(r-1))^(n+g)
  int sqrt_d_exp = 0;    // n+g
  int two_over_chi = 0;  // 1-g
};

inline CngData cng_data(int r, int n, int g) {
  return {ipow(r, n), ipow(Integer(r) * (r - 1), n + g), n + g, 1 - g};
}

/// |c_{n,g}| as a certified interval, with |chi| = |chi^r|^(1/r).
inline cert::Interval abs_cng(const DiagForm& f, int n, int g, long prec) {
  CngData c = cng_data(f.r(), n, g);
  cert::Interval out = cert::Interval(Integer(c.r_pow * c.rr1_pow), prec) *
                       cert::pow(cert::sqrt(cert::Interval(Rational(abs(f.D())), prec)), c.sqrt_d_exp);
  if (c.two_over_chi) out = out * cert::Interval(2L, prec) / cert::root(cert::Interval(abs(f.chi_r()), prec), f.r());
  return out;
}

/// Lambda_{n,g} (or its tilde twin) assembled in the field: for g = 0 the value itself,
/// for g = 1 the factor E with Lambda = root_scale^(1/r) E.
struct LambdaValue {
  int n = 0, g = 0;
  bool tilde = false;
  CngData cng;
  QuadElem core;
  QuadElem root_scale;
  bool root_is_u = true;
  int r_of_root = 0;

  bool is_zero() const { return core.is_zero(); }

  /// Lambda for g = 0, Lambda^r for g = 1.
  QuadElem field_power() const { return g == 0 ? core : root_scale * core.pow(r_of_root); }
  /// |Lambda|^2 for g = 0, |Lambda|^(2r) for g = 1.
  QuadElem abs_sq_power() const { return abs_sq(field_power()); }

  cert::Complex value(long prec) const {
    cert::Complex e = cert::embed(core, prec);
    if (g == 0) return e;
    return cert::principal_root(root_scale, r_of_root, prec) * e;
  }
};

namespace detail {

inline LambdaValue assemble(const DiagForm& f, const Branch& X, const Branch& Y, const QuadElem& x1r, const QuadElem& y1r, int n,
                            int g, bool tilde) {
  int r = f.r();
  pade::PadePair p = pade::build(n, g, r);
  QuadElem K = f.sqrt_D() * Rational(r * r * (r - 1));
  QuadElem a_star = pade::homogenized(p.a, K * x1r, K * (x1r - y1r));
  QuadElem b_star = pade::homogenized(p.b, K * x1r, K * (x1r - y1r));
  LambdaValue out;
  out.n = n;
  out.g = g;
  out.tilde = tilde;
  out.cng = cng_data(r, n, g);
  out.r_of_root = r;
  if (g == 0) {
    // (2/chi) X1 Y2 and (2/chi) X2 Y1 are u-v products, so the roots cancel against chi
    out.core = (X.lin1 * Y.lin2 * a_star - X.lin2 * Y.lin1 * b_star) * Rational(2) / f.lambda();
    out.root_scale = f.field_elem(Rational(1));
  } else {
    QuadElem tail = K * X.scale * X.lin1.pow(r - 1) * X.lin2 * Y.lin1 * b_star;
    out.core = f.sqrt_D() * Rational(r * (r - 1)) * (Y.lin2 * a_star - tail);
    out.root_scale = Y.scale;
    out.root_is_u = Y.is_u;
  }
  return out;
}

}  // namespace detail

inline LambdaValue lambda(const PairContext& c, int n, int g) { return detail::assemble(c.form, c.X, c.Y, c.x1r, c.y1r, n, g, false); }
inline LambdaValue lambda_tilde(const PairContext& c, int n, int g) {
  return detail::assemble(c.form, c.Y, c.X, c.y1r, c.x1r, n, g, true);
}

namespace detail {

inline cert::Complex rho(const Branch& b, int r, long prec) { return cert::principal_root(b.scale, r, prec); }

}  // namespace detail

/// Sigma_{n,g} from its definition, with Y/X ratios through certified r-th roots.
inline cert::Complex sigma(const PairContext& c, int n, int g, long prec = 256, bool tilde = false) {
  int r = c.form.r();
  pade::PadePair p = pade::build(n, g, r);
  const Branch& X = tilde ? c.Y : c.X;
  const Branch& Y = tilde ? c.X : c.Y;
  const QuadElem& z = tilde ? c.zt1 : c.z1;
  cert::Complex ratio = detail::rho(Y, r, prec) / detail::rho(X, r, prec);
  cert::Complex q2 = ratio * cert::embed(Y.lin2 / X.lin2, prec);
  cert::Complex q1 = ratio * cert::embed(Y.lin1 / X.lin1, prec);
  return q2 * cert::embed(eval(p.a, z), prec) - q1 * cert::embed(eval(p.b, z), prec);
}

/// c_{n,g} X1^(rn+1-g) X2 Sigma_{n,g}, everything through intervals.
inline cert::Complex lambda_by_definition(const PairContext& c, int n, int g, long prec = 256, bool tilde = false) {
  int r = c.form.r();
  const Branch& X = tilde ? c.Y : c.X;
  cert::Complex rx = detail::rho(X, r, prec);
  cert::Complex x1 = rx * cert::embed(X.lin1, prec), x2 = rx * cert::embed(X.lin2, prec);
  CngData d = cng_data(r, n, g);
  cert::Complex cng = cert::embed(Rational(d.r_pow * d.rr1_pow), prec) * cert::pow(cert::embed(c.form.sqrt_D(), prec), d.sqrt_d_exp);
  if (d.two_over_chi) {
    cert::Complex chi = detail::rho(c.X, r, prec) * detail::rho(c.Y, r, prec) * cert::embed(c.form.lambda(), prec);
    cng = cng * (cert::embed(Rational(2), prec) / chi);
  }
  return cng * cert::pow(x1, static_cast<unsigned long>(r * n + 1 - g)) * x2 * sigma(c, n, g, prec, tilde);
}

inline bool overlaps(const cert::Interval& a, const cert::Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) >= 0 && mpfr_cmp(b.hi(), a.lo()) >= 0;
}
inline bool overlaps(const cert::Complex& a, const cert::Complex& b) { return overlaps(a.re, b.re) && overlaps(a.im, b.im); }

enum class Vanishing { both_nonzero, first_zero, second_zero, both_zero, undecided };

inline const char* to_string(Vanishing v) {
  switch (v) {
    case Vanishing::both_nonzero: return "both_nonzero";
    case Vanishing::first_zero: return "first_zero";
    case Vanishing::second_zero: return "second_zero";
    case Vanishing::both_zero: return "both_zero";
    default: return "undecided";
  }
}

struct NonvanishingResult {
  Vanishing status = Vanishing::undecided;
  // the interval route separated every nonzero Sigma from 0 within the budget
  bool interval_confirms = false;
  long bits = 0;
};

/// Which of Sigma_{n,0}, Sigma_{n+I,1} vanish. Zero is decided in the field (Sigma = 0 iff the
/// assembled Lambda is 0); nonzero values are also separated from 0 by interval refinement.
inline NonvanishingResult nonvanishing_check(const PairContext& c, int n, int I, long budget = 0) {
  if (I != 0 && I != 1) throw ParameterError("I must be 0 or 1");
  if (budget <= 0) budget = cert::default_bits_budget();
  bool z0 = lambda(c, n, 0).is_zero(), z1 = lambda(c, n + I, 1).is_zero();
  NonvanishingResult out;
  out.status = z0 ? (z1 ? Vanishing::both_zero : Vanishing::first_zero) : (z1 ? Vanishing::second_zero : Vanishing::both_nonzero);
  out.interval_confirms = true;
  for (auto [m, g, zero] : {std::tuple{n, 0, z0}, std::tuple{n + I, 1, z1}}) {
    if (zero) continue;
    bool sep = false;
    for (long prec = 64; prec <= budget && !sep; prec *= 2) {
      sep = sigma(c, m, g, prec).excludes_zero();
      out.bits = std::max(out.bits, prec);
    }
    out.interval_confirms = out.interval_confirms && sep;
  }
  return out;
}

/// |Lambda Lambda~|^2 (g = 0) or |Lambda Lambda~|^(2r) (g = 1), exactly.
inline QuadElem product_abs_sq_power(const LambdaValue& l, const LambdaValue& lt) {
  if (l.g == 0) return abs_sq(l.core * lt.core);
  return abs_sq(l.root_scale * lt.root_scale * (l.core * lt.core).pow(l.r_of_root));
}

}  // namespace thuediag::algseq
