#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "thuediag/exactnum/errors.hpp"

namespace thuediag {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Integer ipow(long base, unsigned long e) { return ipow(Integer(base), e); }

inline Rational qpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return qpow(Rational(1) / base, -e);
  }
  Integer n = ipow(Integer(base.get_num()), static_cast<unsigned long>(e));
  Integer d = ipow(Integer(base.get_den()), static_cast<unsigned long>(e));
  Rational q;
  mpq_set_num(q.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), d.get_mpz_t());
  return q;  // already canonical: gcd(n^e, d^e) = 1
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::string ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_q(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_q(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Nearest integer; halves round toward +infinity.
inline Integer round_q(const Rational& q) { return floor_q(q + Rational(1, 2)); }

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

/// floor(n^(1/k)) for n >= 0.
inline Integer iroot_floor(const Integer& n, unsigned long k) {
  if (n < 0) throw DomainError("integer root of a negative number");
  Integer out;
  mpz_root(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

/// Exact k-th root of a rational if it exists; sign handled for odd k.
inline bool exact_root(const Rational& q, unsigned long k, Rational& out) {
  if (q < 0 && k % 2 == 0) return false;
  Integer num = abs(q.get_num()), den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
  out = make_rational(q < 0 ? Integer(-rn) : rn, rd);
  return true;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Generalized binomial q(q-1)...(q-m+1)/m!.
inline Rational binomial(const Rational& q, unsigned long m) {
  Rational out(1);
  for (unsigned long i = 0; i < m; ++i) {
    out *= q - Rational(static_cast<long>(i));
    out /= Rational(static_cast<long>(i + 1));
  }
  return out;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParameterError("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw ParameterError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ParameterError("not an integer: '" + s + "'");
  return z;
}

/// Bit length of |z| (0 for z = 0).
inline long bit_length(const Integer& z) {
  return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace thuediag
