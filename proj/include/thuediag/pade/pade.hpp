#pragma once

#include <string>
#include <vector>

#include "thuediag/exactnum.hpp"

namespace thuediag::pade {

/// Coefficients, constant term first.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return out;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

/// p(1 - z), by Taylor shift.
inline Poly compose_one_minus(const Poly& p) {
  Poly out(p.size(), Rational(0));
  for (size_t k = 0; k < p.size(); ++k)
    for (size_t m = 0; m <= k; ++m) {
      Rational t = p[k] * Rational(binomial(k, m));
      out[m] += m % 2 ? -t : t;
    }
  return out;
}

inline bool poly_equal(Poly a, Poly b) {
  size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
  return a == b;
}

template <class T>
T poly_eval(const Poly& p, const T& z, const T& zero) {
  T acc = zero;
  for (size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

inline Rational poly_eval(const Poly& p, const Rational& z) { return poly_eval(p, z, Rational(0)); }

/// Exact Gaussian rational re + im*i.
struct Gaussian {
  Rational re{0}, im{0};
  Rational abs_sq() const { return re * re + im * im; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator+(const Gaussian& a, const Rational& q) { return {a.re + q, a.im}; }
  friend Gaussian operator-(const Rational& q, const Gaussian& a) { return {q - a.re, -a.im}; }
};

inline Gaussian poly_eval(const Poly& p, const Gaussian& z) { return poly_eval(p, z, Gaussian{}); }

struct PadePair {
  int n = 0, g = 0, r = 0;
  Poly a, b;
};

inline void check_params(int n, int g, int r) {
  if (n < 1) throw ParameterError("n must be positive");
  if (g != 0 && g != 1) throw ParameterError("g must be 0 or 1");
  if (r < 3) throw ParameterError("r must be at least 3");
}

inline PadePair build(int n, int g, int r) {
  check_params(n, g, r);
  PadePair p{n, g, r, {}, {}};
  Rational inv_r = make_rational(1, r);
  for (int m = 0; m <= n; ++m) {
    Rational c = binomial(Rational(n - g) + inv_r, m) * Rational(binomial(2 * n - g - m, n - g));
    p.a.push_back(m % 2 ? -c : c);
  }
  for (int m = 0; m <= n - g; ++m) {
    Rational c = binomial(Rational(n) - inv_r, m) * Rational(binomial(2 * n - g - m, n));
    p.b.push_back(m % 2 ? -c : c);
  }
  return p;
}

/// (1 - z)^(1/r) through z^order.
inline Poly root_series(int r, int order) {
  Poly s;
  Rational e = make_rational(1, r), c = 1;
  for (int m = 0; m <= order; ++m) {
    s.push_back(m % 2 ? -c : c);
    c = c * (e - m) / (m + 1);
  }
  return s;
}

/// A(z) - (1 - z)^(1/r) B(z) through z^order.
inline Poly remainder_series(const PadePair& p, int order) {
  if (order < 0) throw ParameterError("order must be non-negative");
  Poly prod = poly_mul(root_series(p.r, order), p.b);
  prod.resize(order + 1, Rational(0));
  Poly a = p.a;
  a.resize(std::max<size_t>(a.size(), order + 1), Rational(0));
  Poly out(order + 1);
  for (int i = 0; i <= order; ++i) out[i] = a[i] - prod[i];
  return out;
}

/// Index of the first nonzero coefficient, or -1.
inline int vanishing_order(const Poly& s) {
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return -1;
}

inline Poly c_poly(int n, int g, int r) {
  check_params(n, g, r);
  Rational inv_r = make_rational(1, r);
  Poly c;
  for (int m = 0; m <= n; ++m) c.push_back(binomial(Rational(n) - inv_r, n - m) * binomial(Rational(n - g) + inv_r, m));
  return c;
}

inline Poly d_poly(int n, int g, int r) {
  check_params(n, g, r);
  Rational inv_r = make_rational(1, r);
  Poly d;
  for (int m = 0; m <= n - g; ++m) d.push_back(binomial(Rational(n) - inv_r, m) * binomial(Rational(n - g) + inv_r, n - g - m));
  return d;
}

/// C(z) = A(1 - z) and D(z) = B(1 - z), coefficientwise and at the samples.
inline bool contiguity_check(int n, int g, int r, const std::vector<Rational>& samples) {
  PadePair p = build(n, g, r);
  Poly c = c_poly(n, g, r), d = d_poly(n, g, r);
  if (!poly_equal(c, compose_one_minus(p.a)) || !poly_equal(d, compose_one_minus(p.b))) return false;
  for (const auto& z : samples)
    if (poly_eval(c, z) != poly_eval(p.a, Rational(1 - z)) || poly_eval(d, z) != poly_eval(p.b, Rational(1 - z))) return false;
  return poly_eval(c, Rational(1)) == Rational(binomial(2 * n - g, n));
}

inline bool c_positive(int n, int g, int r) {
  for (const auto& c : c_poly(n, g, r))
    if (c <= 0) return false;
  return true;
}

struct SupBoundReport {
  int checked = 0;
  int skipped = 0;
  bool ok = true;
  std::vector<std::string> notices;
};

/// |A(z)|^2 against the squared disc bounds, exactly.
inline SupBoundReport sup_bound_check(const PadePair& p, const std::vector<Gaussian>& samples) {
  SupBoundReport rep;
  Rational near = Rational(binomial(2 * p.n - p.g, p.n));
  Rational far = Rational(ipow(2, 3 * p.n + 2));
  // The intermediate C(2) <= 2^(3n+2).
  Rational c2 = poly_eval(c_poly(p.n, p.g, p.r), Rational(2));
  if (c2 > far) {
    rep.ok = false;
    rep.notices.push_back("C(2) exceeds 2^(3n+2)");
  }
  for (const auto& z : samples) {
    Rational dist = (1 - z).abs_sq();
    Rational a2 = poly_eval(p.a, z).abs_sq();
    if (dist <= 1) {
      ++rep.checked;
      if (a2 > near * near) rep.ok = false;
    } else if (dist <= 4) {
      ++rep.checked;
      if (a2 > far * far) rep.ok = false;
    } else {
      ++rep.skipped;
      rep.notices.push_back("sample " + z.re.get_str() + "+" + z.im.get_str() + "i outside |1-z| <= 2, skipped");
    }
  }
  return rep;
}

/// Deterministic Gaussian samples with |1 - z| in {1/2, 1, 3/2, 2} on rational points of the circle.
inline std::vector<Gaussian> standard_samples(int count = 20) {
  static const int triples[][2] = {{1, 0}, {2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 4}, {6, 1}, {7, 2}, {7, 4}};
  static const Rational radii[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  std::vector<Gaussian> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const auto& t = triples[i % 10];
    Rational s = t[0] * t[0] + t[1] * t[1];
    Gaussian w{Rational(t[0] * t[0] - t[1] * t[1]) / s, Rational(2 * t[0] * t[1]) / s};
    if ((i / 10) % 2) w.im = -w.im;
    const Rational& rho = radii[i % 4];
    out.push_back(1 - Gaussian{w.re * rho, w.im * rho});
  }
  return out;
}

/// Closed value of A_{n,0} B_{n+I,1} - A_{n+I,1} B_{n,0}, a constant multiple of z^(2n+I).
inline Rational wronskian_at_one(int n, int I, int r) {
  if (I != 0 && I != 1) throw ParameterError("I must be 0 or 1");
  check_params(n, 0, r);
  Rational inv_r = make_rational(1, r);
  return binomial(Rational(n) - inv_r, n) * binomial(Rational(n + I - 1) + inv_r, n + I - 1) -
         binomial(Rational(n + I) - inv_r, n + I) * binomial(Rational(n) + inv_r, n);
}

inline Poly wronskian_poly(int n, int I, int r) {
  PadePair a0 = build(n, 0, r), a1 = build(n + I, 1, r);
  return poly_sub(poly_mul(a0.a, a1.b), poly_mul(a1.a, a0.b));
}

/// t(m) = binom(a/r, m) r^(2m); throws if it fails to be an integer.
inline Integer integrality_t(long a, int r, unsigned long m) {
  if (r < 1) throw ParameterError("r must be positive");
  Rational t = binomial(make_rational(a, r), m) * Rational(ipow(r, 2 * m));
  if (!is_integer(t)) throw TheoremViolation("t(m) is not integral: a=" + std::to_string(a) + " r=" + std::to_string(r) + " m=" + std::to_string(m));
  return t.get_num();
}

/// Homogenization X^deg p(Y/X) at quadratic arguments.
inline QuadElem homogenized(const Poly& p, const QuadElem& X, const QuadElem& Y) {
  size_t deg = p.size() - 1;
  QuadElem acc(Rational(0), X.d());
  for (size_t m = 0; m <= deg; ++m) acc += X.pow(deg - m) * Y.pow(m) * p[m];
  return acc;
}

/// A*(lambda, r^2 sqrt(D) c) and B*(...) both in the ring of integers.
inline bool star_integral(const PadePair& p, const QuadElem& lambda, const Integer& c) {
  QuadElem Y = QuadElem::sqrt_d(lambda.d()) * Rational(c * p.r * p.r);
  return homogenized(p.a, lambda, Y).is_algebraic_integer() && homogenized(p.b, lambda, Y).is_algebraic_integer();
}

struct RemainderBound {
  bool ok = false;
  long bits = 0;
  cert::Interval lhs, rhs;
};

/// |A(z) - (1-z)^(1/r) B(z)| against binom-ratio * |z|^(2n+1-g) (1-|z|)^(-(2n+1-g)/2), certified.
/// Precision starts at `prec` and doubles until the comparison separates.
inline RemainderBound remainder_bound_check(const PadePair& p, const Rational& z, long prec = 64, long budget = 0) {
  if (abs(z) > Rational(1, 2)) throw ParameterError("remainder bound sampled only for |z| <= 1/2");
  if (budget <= 0) budget = cert::default_bits_budget();
  using cert::Interval;
  Rational inv_r = make_rational(1, p.r);
  int e = 2 * p.n + 1 - p.g;
  Rational k = binomial(Rational(p.n - p.g) + inv_r, p.n + 1 - p.g) * binomial(Rational(p.n) - inv_r, p.n) /
               Rational(binomial(e, p.n));
  Rational az = abs(z);
  Rational a = poly_eval(p.a, z), b = poly_eval(p.b, z);
  for (long bits = prec;; bits *= 2) {
    Interval root = cert::root(Interval(Rational(1 - z), bits), p.r);
    Interval lhs = abs(Interval(a, bits) - root * Interval(b, bits));
    // (1-|z|)^(-e/2) = 1/sqrt((1-|z|)^e)
    Interval decay = cert::inverse(cert::sqrt(Interval(qpow(1 - az, e), bits)));
    Interval rhs = Interval(abs(k) * qpow(az, e), bits) * decay;
    if (mpfr_cmp(lhs.hi(), rhs.lo()) <= 0) return {true, bits, lhs, rhs};
    if (mpfr_cmp(lhs.lo(), rhs.hi()) > 0) return {false, bits, lhs, rhs};
    if (bits * 2 > budget) throw PrecisionExhausted("remainder bound undecided", bits);
  }
}

}  // namespace thuediag::pade
