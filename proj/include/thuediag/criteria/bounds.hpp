#pragma once

#include <string>

#include "thuediag/forms.hpp"

namespace thuediag::criteria {

enum class Theorem { T1_1, T1_2, T1_3, T1_4, C1_5, C1_6, T1_7, T1_8, T1_9, T2_1 };

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T1_1: return "T1_1";
    case Theorem::T1_2: return "T1_2";
    case Theorem::T1_3: return "T1_3";
    case Theorem::T1_4: return "T1_4";
    case Theorem::C1_5: return "C1_5";
    case Theorem::C1_6: return "C1_6";
    case Theorem::T1_7: return "T1_7";
    case Theorem::T1_8: return "T1_8";
    case Theorem::T1_9: return "T1_9";
    default: return "T2_1";
  }
}

inline Theorem parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::T1_1, Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::C1_5, Theorem::C1_6, Theorem::T1_7,
                    Theorem::T1_8, Theorem::T1_9, Theorem::T2_1})
    if (s == to_string(t)) return t;
  throw ParameterError("unknown theorem id: " + s);
}

/// The four rows every count bound is split into.
enum class FormCase { d_negative, even_indefinite, odd_indefinite, definite };

inline const char* to_string(FormCase c) {
  switch (c) {
    case FormCase::d_negative: return "D<0";
    case FormCase::even_indefinite: return "D>0, r even, indefinite";
    case FormCase::odd_indefinite: return "D>0, r odd, indefinite";
    default: return "D>0, definite";
  }
}

inline FormCase form_case(const DiagForm& f) {
  if (f.D() < 0) return FormCase::d_negative;
  if (f.is_definite()) return FormCase::definite;
  return f.r() % 2 == 0 ? FormCase::even_indefinite : FormCase::odd_indefinite;
}

struct Bound {
  Integer value;
  std::string expr;
};

/// Count bounds by theorem and case. `k` is m for the (kr)-shaped rows, l for T2_1; `w` is omega(h).
/// The binomial theorems T1_1, T1_2 ignore the case; T1_2 takes k = 2 or 3 for its two thresholds.
inline Bound bound_table(Theorem t, FormCase c, int r, int k = 0, int w = 0) {
  Integer R(r), K(k);
  Integer rw = ipow(R, static_cast<unsigned long>(w));
  std::string sw = "r^" + std::to_string(w);
  Bound b;
  auto pick = [&](Integer neg, std::string se, Integer even, std::string sev, Integer odd, std::string so, Integer def, std::string sd) {
    switch (c) {
      case FormCase::d_negative: b = {neg, se}; break;
      case FormCase::even_indefinite: b = {even, sev}; break;
      case FormCase::odd_indefinite: b = {odd, so}; break;
      default: b = {def, sd};
    }
  };
  switch (t) {
    case Theorem::T1_1: b = {3, "3"}; break;
    case Theorem::T1_2: b = {K * rw, std::to_string(k) + "*" + sw}; break;
    case Theorem::T1_3: pick(2 * R + 1, "2r+1", 5, "5", 3, "3", 1, "1"); break;
    case Theorem::C1_5: pick(3 * R, "3r", 6, "6", 3, "3", 1, "1"); break;
    case Theorem::T1_4:
    case Theorem::C1_6:
    case Theorem::T1_7:
    case Theorem::T1_8: pick(R * K, "r*m", 2 * K, "2m", K, "m", 1, "1"); break;
    case Theorem::T1_9: pick(3 * R * rw, "3*r^(1+" + std::to_string(w) + ")", 6 * rw, "6*" + sw, 3 * rw, "3*" + sw, rw, sw); break;
    case Theorem::T2_1: pick(2 * K * R, "2lr", 4 * K, "4l", 2 * K, "2l", 1, "1"); break;
  }
#ifdef THUEDIAG_FAULT_BOUND_OFF_BY_ONE
  b.value -= 1;
#endif
  return b;
}

/// |Delta| / (2^(r^2-r) r^r h^(2r-2)).
inline Rational delta_prime(const DiagForm& f, const Integer& h) {
  if (h < 1) throw ParameterError("h must be positive");
  int r = f.r();
  Integer den = ipow(2, static_cast<unsigned long>(r * r - r)) * ipow(r, static_cast<unsigned long>(r)) *
                ipow(h, static_cast<unsigned long>(2 * r - 2));
  return make_rational(abs(discriminant(f).value), den);
}

}  // namespace thuediag::criteria
