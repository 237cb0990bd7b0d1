#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thuediag/exactnum.hpp"
#include "thuediag/forms/binary_form.hpp"

namespace thuediag {

using Matrix2 = std::array<std::array<Integer, 2>, 2>;

inline Matrix2 identity2() { return {{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}}; }

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

inline Integer det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline bool is_reduced_quadratic(const Integer& A, const Integer& B, const Integer& C) { return C >= A && A >= abs(B); }

/// scale * (px x + py y)^r, all entries in one quadratic field.
struct LinearPower {
  QuadElem scale, px, py;
};

enum class Definiteness { definite, indefinite };
enum class Parity { odd, even };

struct FormClass {
  Definiteness definiteness;
  Sign d_sign;
  Parity parity;
};

/// F = xi - eta with xi = scale_u * L_u^r, eta = scale_v * L_v^r and L_u L_v = lambda * (A x^2 + B x y + C y^2).
class DiagForm {
 public:
  DiagForm(int r, const LinearPower& u, const LinearPower& v, std::string provenance = "") : r_(r), provenance_(std::move(provenance)) {
    build(u, v);
  }

  int r() const { return r_; }
  const std::vector<Integer>& coeffs() const { return f_.coeffs(); }
  const BinaryForm<Integer>& form() const { return f_; }
  const Integer& A() const { return A_; }
  const Integer& B() const { return B_; }
  const Integer& C() const { return C_; }
  const Integer& D() const { return D_; }
  const Rational& chi_r() const { return chi_r_; }
  /// j^(r(r-1)), rational.
  const Rational& j_power() const { return j_power_; }
  /// |j|^(2r) = (chi^r)^2 |D|^r.
  Rational j_abs_2r() const { return chi_r_ * chi_r_ * qpow(Rational(abs(D_)), r_); }
  /// j / chi, a square root of D fixed by the linear data.
  const QuadElem& d1() const { return d1_; }
  const QuadElem& lambda() const { return lambda_; }
  const LinearPower& u() const { return u_; }
  const LinearPower& v() const { return v_; }
  const BinaryForm<QuadElem>& xi_form() const { return xi_form_; }
  const BinaryForm<QuadElem>& eta_form() const { return eta_form_; }
  const std::string& provenance() const { return provenance_; }

  /// xi = alpha1 (x + beta1 y)^r; absent when the linear factor has no x term.
  std::optional<QuadElem> alpha1() const { return u_.px.is_zero() ? std::nullopt : std::optional(u_.scale * u_.px.pow(r_)); }
  std::optional<QuadElem> beta1() const { return u_.px.is_zero() ? std::nullopt : std::optional(u_.py / u_.px); }
  std::optional<QuadElem> gamma1() const { return v_.px.is_zero() ? std::nullopt : std::optional(v_.scale * v_.px.pow(r_)); }
  std::optional<QuadElem> delta1() const { return v_.px.is_zero() ? std::nullopt : std::optional(v_.py / v_.px); }

  QuadElem field_zero() const { return QuadElem(Rational(0), D_); }
  QuadElem field_elem(const Rational& q) const { return QuadElem(q, D_); }
  QuadElem sqrt_D() const { return QuadElem::sqrt_d(D_); }

  /// Q(x, y) = A x^2 + B x y + C y^2.
  Integer quad_value(const Integer& x, const Integer& y) const { return A_ * x * x + B_ * x * y + C_ * y * y; }

  Integer eval(const Integer& x, const Integer& y) const { return f_.eval(x, y); }

  QuadElem linear_u(const Integer& x, const Integer& y) const { return u_.px * Rational(x) + u_.py * Rational(y); }
  QuadElem linear_v(const Integer& x, const Integer& y) const { return v_.px * Rational(x) + v_.py * Rational(y); }

  std::pair<QuadElem, QuadElem> eval_xi_eta(const Integer& x, const Integer& y) const {
    return {u_.scale * linear_u(x, y).pow(r_), v_.scale * linear_v(x, y).pow(r_)};
  }

  FormClass classify() const {
    FormClass c{Definiteness::indefinite, D_ < 0 ? Sign::negative : Sign::positive, r_ % 2 ? Parity::odd : Parity::even};
    if (D_ > 0 && r_ % 2 == 0 && to_int(u_.scale.sign()) * to_int(v_.scale.sign()) < 0) c.definiteness = Definiteness::definite;
    return c;
  }
  bool is_definite() const { return classify().definiteness == Definiteness::definite; }

  bool is_reduced() const { return D_ < 0 && is_reduced_quadratic(A_, B_, C_); }

  /// Coefficients of r(r-1) sqrt(D) xi and r(r-1) sqrt(D) eta all lie in the ring of integers.
  bool scaled_xi_eta_integral() const {
    QuadElem s = sqrt_D() * Rational(r_ * (r_ - 1));
    for (const auto* form : {&xi_form_, &eta_form_})
      for (const auto& c : form->coeffs())
        if (!(s * c).is_algebraic_integer()) return false;
    return true;
  }

  /// (2/chi) u(x1,y1) v(x2,y2) = 2 L_u(x1,y1) L_v(x2,y2) / lambda.
  QuadElem two_over_chi_uv(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) const {
    return linear_u(x1, y1) * linear_v(x2, y2) * Rational(2) / lambda_;
  }

 private:
  void build(const LinearPower& u_in, const LinearPower& v_in);

  int r_;
  std::string provenance_;
  BinaryForm<Integer> f_;
  BinaryForm<QuadElem> xi_form_, eta_form_;
  Integer A_, B_, C_, D_;
  Rational chi_r_, j_power_;
  QuadElem lambda_, d1_;
  LinearPower u_, v_;
};

inline void DiagForm::build(const LinearPower& ui, const LinearPower& vi) {
  if (r_ < 3) throw ParameterError("degree must be at least 3, got " + std::to_string(r_));
  const Integer& din = ui.scale.d();
  for (const QuadElem* e : {&ui.px, &ui.py, &vi.scale, &vi.px, &vi.py})
    if (e->d() != din) throw FieldMismatchError("linear data must share one field parameter");
  if (ui.scale.is_zero() || vi.scale.is_zero()) throw DegenerateError("zero scale in a linear power");

  QuadElem P = ui.px * vi.px, M = ui.px * vi.py + ui.py * vi.px, N = ui.py * vi.py;
  const QuadElem* pivot = !P.is_zero() ? &P : (!M.is_zero() ? &M : &N);
  if (pivot->is_zero()) throw DegenerateError("a linear factor vanishes identically");
  Rational ratio[3];
  const QuadElem* parts[3] = {&P, &M, &N};
  for (int i = 0; i < 3; ++i) {
    QuadElem q = *parts[i] / *pivot;
    if (!q.is_rational()) throw DegenerateError("quadratic part is not a rational multiple of an integer form");
    ratio[i] = q.a();
  }
  Integer den = 1, num = 0;
  for (const auto& q : ratio) den = lcm(den, q.get_den());
  Integer abc[3];
  for (int i = 0; i < 3; ++i) {
    abc[i] = Rational(ratio[i] * Rational(den)).get_num();
    num = gcd(num, abc[i]);
  }
  int s = 1;
  for (const auto& z : abc)
    if (z != 0) {
      s = sgn(z);
      break;
    }
  for (auto& z : abc) z = s * z / num;
  A_ = abc[0];
  B_ = abc[1];
  C_ = abc[2];
  D_ = B_ * B_ - 4 * A_ * C_;
  if (D_ == 0) throw DegenerateError("linear factors are proportional (D = 0)");

  auto re = [&](const QuadElem& x) { return x.rebase(D_); };
  u_ = {re(ui.scale), re(ui.px), re(ui.py)};
  v_ = {re(vi.scale), re(vi.px), re(vi.py)};
  int pidx = pivot == &P ? 0 : (pivot == &M ? 1 : 2);
  lambda_ = re(*pivot) / QuadElem(Rational(abc[pidx]), D_);

  QuadElem zero = field_zero();
  xi_form_ = BinaryForm<QuadElem>::linear(u_.px, u_.py, zero).pow(r_).scaled(u_.scale);
  eta_form_ = BinaryForm<QuadElem>::linear(v_.px, v_.py, zero).pow(r_).scaled(v_.scale);
  std::vector<Integer> coeffs;
  for (int i = 0; i <= r_; ++i) {
    QuadElem c = xi_form_[i] - eta_form_[i];
    if (!c.is_rational() || !is_integer(c.a()))
      throw NotIntegralError("coefficient of x^" + std::to_string(r_ - i) + " y^" + std::to_string(i) + " is " + c.str());
    coeffs.push_back(c.a().get_num());
  }
  f_ = BinaryForm<Integer>(std::move(coeffs));
  if (!is_perfect_square(D_)) {
    for (int i = 0; i <= r_; ++i)
      if (xi_form_[i].conj() != -eta_form_[i])
        throw DegenerateError("xi and -eta are not conjugate at coefficient " + std::to_string(i));
  }

  QuadElem chi_r = u_.scale * v_.scale * lambda_.pow(r_);
  if (!chi_r.is_rational()) throw DegenerateError("chi^r is not rational: " + chi_r.str());
  chi_r_ = chi_r.a();
  QuadElem det = u_.px * v_.py - u_.py * v_.px;
  d1_ = det / lambda_;
  if (d1_ * d1_ != field_elem(Rational(D_))) throw InconsistencyError("j/chi does not square to D");

  j_power_ = qpow(chi_r_, r_ - 1) * qpow(Rational(D_), r_ * (r_ - 1) / 2);
  // Independent route: (j^r)^(r-1) with j^r = scale_u scale_v det^r.
  QuadElem jr = u_.scale * v_.scale * det.pow(r_);
  QuadElem jp = jr.pow(r_ - 1);
  if (!jp.is_rational() || jp.a() != j_power_) throw InconsistencyError("j^(r(r-1)) routes disagree");
}

inline DiagForm make_binomial(const Integer& a, const Integer& b, int r) {
  if (a < 1 || b < 1) throw ParameterError("binomial coefficients must be positive");
  Integer d = 1;
  QuadElem one(Rational(1), d), zero(Rational(0), d);
  return DiagForm(r, {QuadElem(Rational(a), d), one, zero}, {QuadElem(Rational(b), d), zero, one},
                  "binomial(" + a.get_str() + "," + b.get_str() + "," + std::to_string(r) + ")");
}

/// xi = alpha1 (x + beta1 y)^r, eta = gamma1 (x + delta1 y)^r.
inline DiagForm make_from_xi(const QuadElem& alpha1, const QuadElem& beta1, const QuadElem& gamma1, const QuadElem& delta1, int r,
                             std::string provenance = "xi") {
  if (beta1 == delta1) throw DegenerateError("delta1 = beta1");
  QuadElem one(Rational(1), alpha1.d());
  return DiagForm(r, {alpha1, one, beta1}, {gamma1, one, delta1}, std::move(provenance));
}

/// a x^r + b y^r style forms: scale_u x^r - scale_v y^r with arbitrary rational signs.
inline DiagForm make_diagonal(const Integer& a, const Integer& b, int r, std::string provenance = "") {
  Integer d = 1;
  QuadElem one(Rational(1), d), zero(Rational(0), d);
  if (provenance.empty()) provenance = "diagonal(" + a.get_str() + "," + b.get_str() + "," + std::to_string(r) + ")";
  return DiagForm(r, {QuadElem(Rational(a), d), one, zero}, {QuadElem(Rational(b), d), zero, one}, std::move(provenance));
}

/// F o m, i.e. F(m00 x + m01 y, m10 x + m11 y).
inline DiagForm gl2_action(const DiagForm& f, const Matrix2& m) {
  Integer dt = det(m);
  if (dt != 1 && dt != -1) throw ParameterError("matrix is not unimodular (det " + dt.get_str() + ")");
  auto map = [&](const LinearPower& l) {
    return LinearPower{l.scale, l.px * Rational(m[0][0]) + l.py * Rational(m[1][0]), l.px * Rational(m[0][1]) + l.py * Rational(m[1][1])};
  };
  DiagForm g(f.r(), map(f.u()), map(f.v()), f.provenance());
  BinaryForm<Integer> direct = f.form().compose(m[0][0], m[0][1], m[1][0], m[1][1]);
  if (!(direct == g.form())) throw InconsistencyError("GL2 action disagrees with direct substitution");
  return g;
}

/// Gauss reduction of a positive definite quadratic part; returns the reduced form and the witness.
inline std::pair<DiagForm, Matrix2> reduce(const DiagForm& f) {
  if (f.D() >= 0) throw UnsupportedError("reduction needs D < 0");
  Integer A = f.A(), B = f.B(), C = f.C();
  Matrix2 M = identity2();
  for (;;) {
    // Translate: B -> B + 2kA with |B| <= A.
    Integer k = floor_q(make_rational(A - B, 2 * A));
    if (k != 0) {
      C = A * k * k + B * k + C;
      B = B + 2 * k * A;
      M = M * Matrix2{{{Integer(1), k}, {Integer(0), Integer(1)}}};
    }
    if (A > C) {
      std::swap(A, C);
      B = -B;
      M = M * Matrix2{{{Integer(0), Integer(-1)}, {Integer(1), Integer(0)}}};
      continue;
    }
    break;
  }
  DiagForm g = gl2_action(f, M);
  if (g.A() != A || g.B() != B || g.C() != C) throw InconsistencyError("reduction bookkeeping disagrees with the transformed form");
  return {g, M};
}

struct Discriminant {
  Integer value;          // resultant route
  Rational via_identity;  // (-1)^((r-1)(r+2)/2) r^r j^(r(r-1))
  bool sign_agrees;
};

/// Both routes; |values| must agree, sign agreement is recorded.
inline Discriminant discriminant(const DiagForm& f) {
  int r = f.r();
  Integer res = discriminant(f.form());
  Rational id = Rational(ipow(r, r)) * f.j_power();
  if (((r - 1) * (r + 2) / 2) % 2) id = -id;
  if (abs(Rational(res)) != abs(id)) throw InconsistencyError("resultant discriminant " + res.get_str() + " vs identity " + id.get_str());
  return {res, id, Rational(res) == id};
}

/// F_xx F_yy - F_xy^2 as a form of degree 2r - 4.
inline BinaryForm<Integer> hessian_form(const DiagForm& f) {
  const auto& F = f.form();
  auto fx = F.dx(), fy = F.dy();
  return fx.dx() * fy.dy() - fx.dy() * fx.dy();
}

inline Integer hessian_value_direct(const DiagForm& f, const Integer& x, const Integer& y) { return hessian_form(f).eval(x, y); }

/// -r^2 (r-1)^2 chi^r D Q(x,y)^(r-2)
inline Rational hessian_value_identity(const DiagForm& f, const Integer& x, const Integer& y) {
  int r = f.r();
  Rational L = Rational(r * r * (r - 1) * (r - 1)) * f.chi_r() * Rational(f.D());
  return -L * Rational(ipow(f.quad_value(x, y), r - 2));
}

inline Integer hessian_value(const DiagForm& f, const Integer& x, const Integer& y) {
  Integer h = hessian_value_direct(f, x, y);
  if (Rational(h) != hessian_value_identity(f, x, y)) throw InconsistencyError("Hessian routes disagree");
  return h;
}

inline BinaryForm<Integer> jacobian_form(const DiagForm& f) {
  auto H = hessian_form(f);
  const auto& F = f.form();
  return F.dx() * H.dy() - F.dy() * H.dx();
}

inline Integer jacobian_value_direct(const DiagForm& f, const Integer& x, const Integer& y) { return jacobian_form(f).eval(x, y); }

/// -r^3 (r-1)^2 (r-2) chi^r D Q^(r-3) d1 (xi + eta); d1 (xi + eta) is rational.
inline Rational jacobian_value_identity(const DiagForm& f, const Integer& x, const Integer& y) {
  int r = f.r();
  auto [xi, eta] = f.eval_xi_eta(x, y);
  QuadElem s = f.d1() * (xi + eta);
  Rational k = Rational(r * r * r * (r - 1) * (r - 1) * (r - 2)) * f.chi_r() * Rational(f.D());
  return -k * Rational(ipow(f.quad_value(x, y), r - 3)) * s.rational();
}

inline Integer jacobian_value(const DiagForm& f, const Integer& x, const Integer& y) {
  Integer p = jacobian_value_direct(f, x, y);
  if (Rational(p) != jacobian_value_identity(f, x, y)) throw InconsistencyError("Jacobian routes disagree");
  return p;
}

inline Integer eval_F(const DiagForm& f, const Integer& x, const Integer& y) { return f.eval(x, y); }

}  // namespace thuediag
