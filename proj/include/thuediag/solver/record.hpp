#pragma once

#include <string>

#include "thuediag/forms.hpp"

namespace thuediag {

/// One primitive solution with its exact analytic data. M = Z^(2r) = max(|xi|^2, |eta|^2).
struct SolutionRecord {
  Integer x, y;
  Integer f_value;
  QuadElem xi, eta;
  QuadElem xi_abs_sq, eta_abs_sq;
  QuadElem zeta_sq;
  QuadElem z_pow_2r;
  Integer hessian;
  int related_index = -1;
  bool tie = false;      // the argmin in the related-root definition is not unique
  bool v_zero = false;   // eta = 0
  long decided_bits = 0;

  bool zeta_lt_one() const { return quad_compare(zeta_sq, QuadElem(Rational(1), zeta_sq.d())) == std::strong_ordering::less; }
  bool zeta_ge_one() const { return !zeta_lt_one(); }
  std::string key() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

inline bool is_canonical(const Integer& x, const Integer& y) { return y > 0 || (y == 0 && x > 0); }

inline std::pair<Integer, Integer> canonical(Integer x, Integer y) {
  if (!is_canonical(x, y)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

/// Builds the record for a canonical primitive pair; related_index is filled in by classify.
inline SolutionRecord make_record(const DiagForm& f, const Integer& x, const Integer& y, const BinaryForm<Integer>* hess = nullptr) {
  SolutionRecord s;
  s.x = x;
  s.y = y;
  s.f_value = f.eval(x, y);
  if (s.f_value == 0) throw DomainError("F vanishes at " + s.key());
  auto [xi, eta] = f.eval_xi_eta(x, y);
  if (xi - eta != f.field_elem(Rational(s.f_value))) throw InconsistencyError("xi - eta != F at " + s.key());
  s.xi = xi;
  s.eta = eta;
  s.xi_abs_sq = abs_sq(xi);
  s.eta_abs_sq = abs_sq(eta);
  s.z_pow_2r = quad_max(s.xi_abs_sq, s.eta_abs_sq);
  s.zeta_sq = QuadElem(Rational(s.f_value * s.f_value), f.D()) / s.z_pow_2r;
  if (hess) {
    s.hessian = hess->eval(x, y);
    if (Rational(s.hessian) != hessian_value_identity(f, x, y)) throw InconsistencyError("Hessian routes disagree at " + s.key());
  } else {
    s.hessian = hessian_value(f, x, y);
  }
  s.v_zero = eta.is_zero();
  return s;
}

}  // namespace thuediag
