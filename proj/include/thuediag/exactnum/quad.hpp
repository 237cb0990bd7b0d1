#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "thuediag/exactnum/rational.hpp"

namespace thuediag {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign to_sign(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
inline int to_int(Sign s) { return static_cast<int>(s); }

/// a + b*sqrt(d). A perfect-square d folds the element into a rational (b = 0).
class QuadElem {
 public:
  QuadElem() = default;
  explicit QuadElem(Integer d) : d_(std::move(d)) { init_root(); }
  QuadElem(Rational a, Integer d) : a_(std::move(a)), d_(std::move(d)) { init_root(); }
  QuadElem(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    init_root();
    if (square_) {
      a_ += b_ * root_;
      b_ = 0;
    }
  }

  static QuadElem sqrt_d(const Integer& d) { return QuadElem(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool square_field() const { return square_; }
  /// True when the element has a real embedding (d > 0, or rational).
  bool is_real() const { return is_rational() || d_ > 0; }

  Rational rational() const {
    if (!is_rational()) throw DomainError("irrational quadratic element where a rational is required: " + str());
    return a_;
  }

  QuadElem conj() const {
    QuadElem out(*this);
    out.b_ = -out.b_;
    return out;
  }

  /// x * conj(x) = a^2 - b^2 d.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

  /// x + conj(x) = 2a.
  Rational trace() const { return 2 * a_; }

  /// Exact sign of the real embedding with sqrt(d) > 0.
  Sign sign() const {
    if (!is_real()) throw DomainError("sign of a non-real quadratic element");
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return to_sign(sa);
    if (sa == 0) return to_sign(sb);
    if (sa == sb) return to_sign(sa);
    // Opposite signs: the larger of a^2 and b^2 d wins.
    int c = cmp(a_ * a_, b_ * b_ * d_);
    if (c == 0) return Sign::zero;  // unreachable for non-square d
    return c > 0 ? to_sign(sa) : to_sign(sb);
  }

  /// Membership in the ring of integers: trace and norm integral.
  bool is_algebraic_integer() const {
    if (square_ || b_ == 0) return is_integer(a_);
    return is_integer(trace()) && is_integer(norm());
  }

  QuadElem& operator+=(const QuadElem& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadElem& operator*=(const QuadElem& o) {
    check(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadElem& operator/=(const QuadElem& o) {
    check(o);
    Rational n = o.norm();
    if (n == 0) throw DomainError("division by zero in Q(sqrt " + d_.get_str() + ")");
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
  }
  QuadElem& operator*=(const Rational& q) {
    a_ *= q;
    b_ *= q;
    return *this;
  }
  QuadElem& operator+=(const Rational& q) {
    a_ += q;
    return *this;
  }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator*(QuadElem x, const Rational& q) { return x *= q; }
  friend QuadElem operator*(const Rational& q, QuadElem x) { return x *= q; }
  friend QuadElem operator+(QuadElem x, const Rational& q) { return x += q; }
  friend QuadElem operator-(QuadElem x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
  }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  QuadElem pow(unsigned long e) const {
    QuadElem result(Rational(1), d_), base(*this);
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Rewrite in Q(sqrt d2) where d/d2 is a rational square.
  QuadElem rebase(const Integer& d2) const {
    if (d2 == d_) return *this;
    if (b_ == 0) return QuadElem(a_, d2);
    Rational ratio = make_rational(d_, d2);
    Rational s;
    if (!exact_root(ratio, 2, s) || s < 0)
      throw FieldMismatchError("Q(sqrt " + d_.get_str() + ") is not Q(sqrt " + d2.get_str() + ")");
    // sqrt(d) = s sqrt(d2) with s > 0, preserving the positive-branch convention.
    return QuadElem(a_, b_ * s, d2);
  }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    std::string out = a_.get_str();
    out += b_ < 0 ? "-" : "+";
    out += Rational(abs(b_)).get_str();
    out += "*sqrt(" + d_.get_str() + ")";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

 private:
  void init_root() {
    square_ = is_perfect_square(d_);
    if (square_) root_ = isqrt(d_);
  }
  void check(const QuadElem& o) const {
    if (o.d_ != d_) throw FieldMismatchError("field parameters differ: " + d_.get_str() + " vs " + o.d_.get_str());
  }

  Rational a_{0}, b_{0};
  Integer d_{1};
  Integer root_{1};
  bool square_ = true;
};

inline QuadElem quad_add(const QuadElem& x, const QuadElem& y) { return x + y; }
inline QuadElem quad_mul(const QuadElem& x, const QuadElem& y) { return x * y; }
inline QuadElem quad_conj(const QuadElem& x) { return x.conj(); }
inline Rational quad_norm(const QuadElem& x) { return x.norm(); }
inline Sign quad_sign(const QuadElem& x) { return x.sign(); }

/// Ordering of two real elements of the same field.
inline std::strong_ordering quad_compare(const QuadElem& x, const QuadElem& y) {
  return to_ordering(to_int((x - y).sign()));
}

inline const QuadElem& quad_max(const QuadElem& x, const QuadElem& y) {
  return quad_compare(x, y) == std::strong_ordering::less ? y : x;
}

/// |x|^2 under the complex embedding: the norm when d < 0 (non-square), x^2 otherwise.
inline QuadElem abs_sq(const QuadElem& x) {
  if (x.is_real()) return x * x;
  return QuadElem(x.norm(), x.d());
}

}  // namespace thuediag
