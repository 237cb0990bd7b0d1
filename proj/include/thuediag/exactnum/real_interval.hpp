#pragma once

#include <string>

#include "thuediag/exactnum/quad.hpp"

namespace thuediag {

/// Closed interval with exact rational (dyadic) endpoints.
struct RealInterval {
  Rational lo, hi;
  long precision_bits = 0;

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool subset_of(const RealInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  std::string str() const { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }
};

namespace detail {

inline Rational dyadic(const Integer& m, long p) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(p));
  return make_rational(m, den);
}

}  // namespace detail

/// Enclosure of value^(1/degree) on the grid 2^-bits. Collapses to a point when the root is rational.
inline RealInterval embed_root(const Rational& value, unsigned long degree, long bits) {
  if (degree == 0) throw DomainError("zeroth root");
  if (bits < 0) throw DomainError("negative precision");
  if (value < 0) {
    if (degree % 2 == 0) throw DomainError("even root of a negative rational");
    RealInterval pos = embed_root(-value, degree, bits);
    return {-pos.hi, -pos.lo, bits};
  }
  Rational exact;
  if (exact_root(value, degree, exact)) return {exact, exact, bits};
  // s = floor(root(value * 2^(bits*degree))) so that s/2^bits <= root < (s+1)/2^bits.
  Integer scaled = value.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(bits * degree));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  Integer s = iroot_floor(q, degree);
  return {detail::dyadic(s, bits), detail::dyadic(s + 1, bits), bits};
}

/// Enclosure of the real embedding of x (sqrt d taken positive).
inline RealInterval embed_interval(const QuadElem& x, long bits) {
  if (x.is_rational()) return {x.a(), x.a(), bits};
  if (x.d() < 0) throw DomainError("real enclosure of a non-real element " + x.str());
  long extra = bit_length(floor_q(abs(x.b()))) + 2;
  RealInterval r = embed_root(Rational(x.d()), 2, bits + extra);
  Rational l = x.a() + x.b() * r.lo, h = x.a() + x.b() * r.hi;
  if (l > h) std::swap(l, h);
  return {l, h, bits};
}

inline RealInterval embed_interval(const Rational& value, unsigned long root_degree, long bits) {
  return embed_root(value, root_degree, bits);
}

}  // namespace thuediag
