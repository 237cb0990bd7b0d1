#pragma once

// Outward-rounded MPFR intervals for the few genuinely transcendental quantities
// (arguments, principal complex roots, logarithms).

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "thuediag/exactnum/quad.hpp"
#include "thuediag/exactnum/real_interval.hpp"

namespace thuediag::cert {

/// Raised when an interval operation cannot be decided at the current precision.
class Undecided : public Error {
 public:
  using Error::Error;
};

class Interval {
 public:
  explicit Interval(long prec = 128) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Rational& q, long prec) : Interval(prec) {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const Integer& z, long prec) : Interval(Rational(z), prec) {}
  Interval(long v, long prec) : Interval(prec) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
  }
  Interval(const Interval& o) : Interval(o.prec()) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : Interval(2) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(Interval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval pi(long prec) {
    Interval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
  }

  static Interval from_real(const RealInterval& r, long prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, r.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, r.hi.get_mpq_t(), MPFR_RNDU);
    return out;
  }

  long prec() const { return static_cast<long>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return !positive() && !negative(); }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  Rational lo_rational() const { return to_rational(lo_); }
  Rational hi_rational() const { return to_rational(hi_); }

  /// Certainly >= q / certainly < q.
  bool ge(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }
  bool gt(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
  bool lt(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
  bool le(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }

  double mid_double() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
  }

  std::string str() const {
    char* a = nullptr;
    char* b = nullptr;
    mpfr_asprintf(&a, "%.20RDg", lo_);
    mpfr_asprintf(&b, "%.20RUg", hi_);
    std::string out = std::string("[") + a + ", " + b + "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return out;
  }

  static Rational to_rational(mpfr_srcptr x) {
    if (!mpfr_number_p(x)) throw Undecided("non-finite interval endpoint");
    if (mpfr_zero_p(x)) return Rational(0);
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rational out(m);
    if (e >= 0)
      mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return out;
  }

 private:
  mpfr_t lo_, hi_;
};

inline long join_prec(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

inline Interval operator+(const Interval& a, const Interval& b) {
  Interval out(join_prec(a, b));
  mpfr_add(out.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(out.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

inline Interval operator-(const Interval& a, const Interval& b) {
  Interval out(join_prec(a, b));
  mpfr_sub(out.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(out.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return out;
}

inline Interval operator-(const Interval& a) {
  Interval out(a.prec());
  mpfr_neg(out.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(out.hi(), a.lo(), MPFR_RNDU);
  return out;
}

inline Interval operator*(const Interval& a, const Interval& b) {
  long p = join_prec(a, b);
  Interval out(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr as[2] = {a.lo(), a.hi()};
  mpfr_srcptr bs[2] = {b.lo(), b.hi()};
  mpfr_set_inf(out.lo(), 1);
  mpfr_set_inf(out.hi(), -1);
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(out.lo(), out.lo(), t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(out.hi(), out.hi(), t, MPFR_RNDU);
    }
  mpfr_clear(t);
  return out;
}

inline Interval inverse(const Interval& a) {
  if (a.contains_zero()) throw Undecided("division by an interval containing zero");
  Interval out(a.prec());
  mpfr_ui_div(out.lo(), 1, a.hi(), MPFR_RNDD);
  mpfr_ui_div(out.hi(), 1, a.lo(), MPFR_RNDU);
  return out;
}

inline Interval operator/(const Interval& a, const Interval& b) { return a * inverse(b); }

inline Interval hull(const Interval& a, const Interval& b) {
  Interval out(join_prec(a, b));
  mpfr_min(out.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(out.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

inline Interval abs(const Interval& a) {
  if (a.positive() || mpfr_sgn(a.lo()) == 0) return a;
  if (a.negative() || mpfr_sgn(a.hi()) == 0) return -a;
  Interval out(a.prec());
  mpfr_set_zero(out.lo(), 1);
  mpfr_neg(out.hi(), a.lo(), MPFR_RNDU);
  mpfr_max(out.hi(), out.hi(), a.hi(), MPFR_RNDU);
  return out;
}

inline Interval pow(const Interval& a, unsigned long n) {
  if (n == 0) return Interval(1L, a.prec());
  Interval out(a.prec());
  if (n % 2 == 1) {
    mpfr_pow_ui(out.lo(), a.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(out.hi(), a.hi(), n, MPFR_RNDU);
    return out;
  }
  Interval m = abs(a);
  mpfr_pow_ui(out.lo(), m.lo(), n, MPFR_RNDD);
  mpfr_pow_ui(out.hi(), m.hi(), n, MPFR_RNDU);
  return out;
}

inline Interval sqrt(const Interval& a) {
  if (a.negative()) throw DomainError("square root of a negative interval");
  Interval out(a.prec());
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(out.lo(), 1);
  else
    mpfr_sqrt(out.lo(), a.lo(), MPFR_RNDD);
  mpfr_sqrt(out.hi(), a.hi(), MPFR_RNDU);
  return out;
}

/// Real k-th root of a non-negative interval.
inline Interval root(const Interval& a, unsigned long k) {
  if (a.negative()) throw DomainError("root of a negative interval");
  Interval out(a.prec());
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(out.lo(), 1);
  else
    mpfr_rootn_ui(out.lo(), a.lo(), k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi(), a.hi(), k, MPFR_RNDU);
  return out;
}

inline Interval log(const Interval& a) {
  if (!a.positive()) throw Undecided("logarithm of an interval reaching zero");
  Interval out(a.prec());
  mpfr_log(out.lo(), a.lo(), MPFR_RNDD);
  mpfr_log(out.hi(), a.hi(), MPFR_RNDU);
  return out;
}

namespace detail {

// Lipschitz-1 enclosure around the midpoint, clipped to [-1, 1].
template <class F>
Interval trig(const Interval& a, F f) {
  long p = a.prec();
  mpfr_t mid, rad, t;
  mpfr_inits2(p + 8, mid, rad, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_add(mid, a.lo(), a.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_sub(rad, a.hi(), mid, MPFR_RNDU);
  mpfr_sub(t, mid, a.lo(), MPFR_RNDU);
  mpfr_max(rad, rad, t, MPFR_RNDU);
  Interval out(p);
  f(t, mid, MPFR_RNDD);
  mpfr_sub(out.lo(), t, rad, MPFR_RNDD);
  f(t, mid, MPFR_RNDU);
  mpfr_add(out.hi(), t, rad, MPFR_RNDU);
  if (mpfr_cmp_si(out.lo(), -1) < 0) mpfr_set_si(out.lo(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(out.hi(), 1) > 0) mpfr_set_si(out.hi(), 1, MPFR_RNDU);
  mpfr_clears(mid, rad, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace detail

inline Interval cos(const Interval& a) {
  return detail::trig(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_cos(r, x, m); });
}
inline Interval sin(const Interval& a) {
  return detail::trig(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_sin(r, x, m); });
}

struct Complex {
  Interval re, im;

  explicit Complex(long prec = 128) : re(prec), im(prec) {}
  Complex(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  long prec() const { return join_prec(re, im); }
  Complex conj() const { return {re, -im}; }
  Interval abs_sq() const { return pow(re, 2) + pow(im, 2); }
  bool excludes_zero() const { return !re.contains_zero() || !im.contains_zero(); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Interval& s) { return {a.re * s, a.im * s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Interval n = b.abs_sq();
  Complex t = a * b.conj();
  return {t.re / n, t.im / n};
}

inline Complex pow(const Complex& a, unsigned long n) {
  Complex out(Interval(1L, a.prec()), Interval(0L, a.prec()));
  Complex base = a;
  while (n) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

/// Principal argument of a box that avoids the closed negative real axis.
inline Interval arg(const Complex& z) {
  bool off_axis = z.im.positive() || z.im.negative();
  if (!off_axis && !z.re.positive()) throw Undecided("argument of a box touching the branch cut");
  long p = z.prec();
  Interval out(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_set_inf(out.lo(), 1);
  mpfr_set_inf(out.hi(), -1);
  mpfr_srcptr ys[2] = {z.im.lo(), z.im.hi()};
  mpfr_srcptr xs[2] = {z.re.lo(), z.re.hi()};
  for (auto y : ys)
    for (auto x : xs) {
      mpfr_atan2(t, y, x, MPFR_RNDD);
      mpfr_min(out.lo(), out.lo(), t, MPFR_RNDD);
      mpfr_atan2(t, y, x, MPFR_RNDU);
      mpfr_max(out.hi(), out.hi(), t, MPFR_RNDU);
    }
  mpfr_clear(t);
  return out;
}

/// Argument of a box excluding zero, valued in (-pi, 2pi); boxes straddling the
/// negative real axis are handled through -z.
inline Interval arg_any(const Complex& z) {
  bool off_axis = z.im.positive() || z.im.negative();
  if (off_axis || z.re.positive()) return arg(z);
  if (!z.re.negative()) throw Undecided("argument of a box containing zero");
  return arg(-z) + Interval::pi(z.prec());
}

/// Enclosure of sqrt(d) for d > 0 or i*sqrt(|d|) for d < 0, as a complex box.
inline Complex embed(const QuadElem& x, long prec) {
  Interval a(x.a(), prec);
  if (x.is_rational()) return {a, Interval(0L, prec)};
  Interval s = sqrt(Interval(Rational(abs(x.d())), prec));
  Interval bs = Interval(x.b(), prec) * s;
  if (x.d() > 0) return {a + bs, Interval(0L, prec)};
  return {a, bs};
}

inline Complex embed(const Rational& q, long prec) { return {Interval(q, prec), Interval(0L, prec)}; }

/// Principal k-th root of a nonzero exact element; the argument of a negative real is pi.
inline Complex principal_root(const QuadElem& x, unsigned long k, long prec) {
  if (x.is_zero()) return {Interval(0L, prec), Interval(0L, prec)};
  Interval theta(prec);
  Interval mod(prec);
  if (x.is_real()) {
    Sign s = x.sign();
    Interval v = embed(x, prec + 16).re;
    mod = root(abs(v), k);
    if (s == Sign::positive) return {mod, Interval(0L, prec)};
    theta = Interval::pi(prec + 16);
  } else {
    mod = root(Interval(x.norm(), prec + 16), 2 * k);
    theta = arg(embed(x, prec + 16));
  }
  Interval phi = theta * Interval(make_rational(1, static_cast<long>(k)), prec + 16);
  return {mod * cos(phi), mod * sin(phi)};
}

/// Precision budget from THUEDIAG_BITS_BUDGET (default 4096).
inline long default_bits_budget() {
  if (const char* env = std::getenv("THUEDIAG_BITS_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64) return v;
  }
  return 4096;
}

}  // namespace thuediag::cert
