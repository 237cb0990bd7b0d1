#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thuediag/exactnum.hpp"

namespace thuediag {

/// Homogeneous polynomial sum c[i] x^(deg-i) y^i over a ring T.
/// `zero` fixes the ring instance (needed for QuadElem, which carries its field).
template <class T>
class BinaryForm {
 public:
  BinaryForm() : zero_(T{}) {}
  explicit BinaryForm(std::vector<T> coeffs, T zero = T{}) : c_(std::move(coeffs)), zero_(std::move(zero)) {
    if (c_.empty()) c_.push_back(zero_);
  }

  static BinaryForm constant(const T& v, const T& zero) { return BinaryForm({v}, zero); }

  /// p x + q y
  static BinaryForm linear(const T& p, const T& q, const T& zero) { return BinaryForm({p, q}, zero); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& zero() const { return zero_; }

  T eval(const T& x, const T& y) const {
    int n = degree();
    std::vector<T> yp(n + 1, zero_);
    yp[0] = one();
    for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * y;
    T acc = zero_, xp = one();
    for (int i = n; i >= 0; --i) {
      acc = acc + c_[i] * xp * yp[i];
      xp = xp * x;
    }
    return acc;
  }

  BinaryForm dx() const {
    int n = degree();
    if (n == 0) return constant(zero_, zero_);
    std::vector<T> out;
    for (int i = 0; i < n; ++i) out.push_back(c_[i] * scalar(n - i));
    return BinaryForm(std::move(out), zero_);
  }

  BinaryForm dy() const {
    int n = degree();
    if (n == 0) return constant(zero_, zero_);
    std::vector<T> out;
    for (int i = 1; i <= n; ++i) out.push_back(c_[i] * scalar(i));
    return BinaryForm(std::move(out), zero_);
  }

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<T> out(f.c_.size() + g.c_.size() - 1, f.zero_);
    for (std::size_t i = 0; i < f.c_.size(); ++i)
      for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
    return BinaryForm(std::move(out), f.zero_);
  }

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw DomainError("adding forms of different degrees");
    std::vector<T> out(f.c_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + g.c_[i];
    return BinaryForm(std::move(out), f.zero_);
  }

  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + g.scaled(f.scalar(-1)); }

  BinaryForm scaled(const T& s) const {
    std::vector<T> out(c_);
    for (auto& v : out) v = v * s;
    return BinaryForm(std::move(out), zero_);
  }

  BinaryForm pow(unsigned e) const {
    BinaryForm result = constant(one(), zero_), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// F(a x + b y, c x + d y)
  BinaryForm compose(const T& a, const T& b, const T& c, const T& d) const {
    int n = degree();
    BinaryForm lx = linear(a, b, zero_), ly = linear(c, d, zero_);
    std::vector<BinaryForm> px(n + 1), py(n + 1);
    px[0] = py[0] = constant(one(), zero_);
    for (int i = 1; i <= n; ++i) {
      px[i] = px[i - 1] * lx;
      py[i] = py[i - 1] * ly;
    }
    BinaryForm acc(std::vector<T>(n + 1, zero_), zero_);
    for (int i = 0; i <= n; ++i) acc = acc + (px[n - i] * py[i]).scaled(c_[i]);
    return acc;
  }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.c_ == g.c_; }

  T one() const { return scalar(1); }
  T scalar(long v) const {
    if constexpr (std::is_same_v<T, QuadElem>)
      return QuadElem(Rational(v), zero_.d());
    else
      return T(v);
  }

 private:
  std::vector<T> c_;
  T zero_;
};

namespace detail {

/// Fraction-free determinant (Bareiss) of a square integer matrix.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sgn = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

}  // namespace detail

/// Resultant of polynomials given by coefficients, highest degree first.
inline Integer resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[j];
  return detail::bareiss_det(std::move(s));
}

/// Discriminant of an integer binary form: (-1)^(n(n-1)/2) Res(f, f') / a_n with f = F(t, 1),
/// after a unimodular shift making F(1, 0) nonzero.
inline Integer discriminant(const BinaryForm<Integer>& form) {
  int n = form.degree();
  if (n < 2) throw DomainError("discriminant needs degree >= 2");
  BinaryForm<Integer> f = form;
  for (long t = 1; f[0] == 0; ++t) f = form.compose(Integer(1), Integer(0), Integer(t), Integer(1));
  std::vector<Integer> p(f.coeffs()), dp;
  for (int i = 0; i < n; ++i) dp.push_back(p[i] * (n - i));
  Integer res = resultant(p, dp);
  Integer q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), p[0].get_mpz_t());
  return (n * (n - 1) / 2) % 2 ? Integer(-q) : q;
}

}  // namespace thuediag
