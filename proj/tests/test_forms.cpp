#include <gtest/gtest.h>

#include "thuediag/forms.hpp"

using namespace thuediag;

namespace {

// Discriminant by plain rational elimination on the Sylvester matrix; independent of Bareiss.
Rational sylvester_disc_oracle(const std::vector<Integer>& c) {
  std::vector<Integer> coeffs = c;
  int n = static_cast<int>(coeffs.size()) - 1;
  // shift y -> y + t x until the leading coefficient is nonzero
  for (long t = 1; coeffs[0] == 0; ++t) {
    BinaryForm<Integer> f(c);
    coeffs = f.compose(Integer(1), Integer(0), Integer(t), Integer(1)).coeffs();
  }
  std::vector<Rational> p(coeffs.begin(), coeffs.end()), dp;
  for (int i = 0; i < n; ++i) dp.push_back(p[i] * (n - i));
  int size = 2 * n - 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= n; ++j) s[i][i + j] = p[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[n - 1 + i][i + j] = dp[j];
  Rational det = 1;
  for (int k = 0; k < size; ++k) {
    int piv = k;
    while (piv < size && s[piv][k] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != k) {
      std::swap(s[piv], s[k]);
      det = -det;
    }
    det *= s[k][k];
    for (int i = k + 1; i < size; ++i) {
      Rational f = s[i][k] / s[k][k];
      for (int j = k; j < size; ++j) s[i][j] -= f * s[k][j];
    }
  }
  Rational out = det / p[0];
  return (n * (n - 1) / 2) % 2 ? Rational(-out) : out;
}

// F_xx F_yy - F_xy^2 evaluated straight from the coefficient list.
Integer hessian_oracle(const std::vector<Integer>& c, const Integer& x, const Integer& y) {
  int n = static_cast<int>(c.size()) - 1;
  auto pw = [](const Integer& b, int e) { return e < 0 ? Integer(0) : ipow(b, e); };
  Integer fxx = 0, fyy = 0, fxy = 0;
  for (int i = 0; i <= n; ++i) {
    int a = n - i, b = i;
    fxx += c[i] * a * (a - 1) * pw(x, a - 2) * pw(y, b);
    fyy += c[i] * b * (b - 1) * pw(x, a) * pw(y, b - 2);
    fxy += c[i] * a * b * pw(x, a - 1) * pw(y, b - 1);
  }
  return fxx * fyy - fxy * fxy;
}

DiagForm gaussian_form(int r) {
  // Tr((x + i y)^r) over Q(i): quadratic part x^2 + y^2
  Integer d = -1;
  QuadElem one(Rational(1), d), i(Rational(0), Rational(1), d);
  return DiagForm(r, {one, one, i}, {-one, one, i.conj()}, "gaussian");
}

std::vector<DiagForm> sample_forms(Rng& g, int count) {
  std::vector<DiagForm> out;
  const long ds[] = {-3, -1, -7, 2, 5, 3, -15};
  while (static_cast<int>(out.size()) < count) {
    int r = static_cast<int>(uniform(g, 3, 9));
    switch (out.size() % 4) {
      case 0: out.push_back(random_trace_form(g, Integer(ds[uniform(g, 0, 6)]), r, 3)); break;
      case 1: out.push_back(random_split_form(g, r, 4)); break;
      case 2: out.push_back(make_binomial(Integer(uniform(g, 1, 40)), Integer(uniform(g, 1, 40)), r)); break;
      default:
        out.push_back(gl2_action(make_binomial(Integer(uniform(g, 1, 9)), Integer(uniform(g, 1, 9)), r), random_unimodular(g)));
    }
  }
  return out;
}

}  // namespace

TEST(MakeBinomial, SpecExamples) {
  DiagForm f = make_binomial(1, 1, 5);
  EXPECT_EQ(f.A(), 0);
  EXPECT_EQ(f.B(), 1);
  EXPECT_EQ(f.C(), 0);
  EXPECT_EQ(f.D(), 1);
  EXPECT_EQ(abs(discriminant(f).value), 3125);
  EXPECT_EQ(sylvester_disc_oracle(f.coeffs()), 3125);

  DiagForm g = make_binomial(3, 2, 5);
  EXPECT_EQ(abs(discriminant(g).value), ipow(5, 5) * ipow(6, 4));

  DiagForm h = make_binomial(2, 3, 6);
  EXPECT_GT(h.D(), 0);
  EXPECT_FALSE(h.is_definite());
  EXPECT_EQ(h.classify().parity, Parity::even);
  EXPECT_THROW(make_binomial(0, 1, 5), ParameterError);
  EXPECT_THROW(make_binomial(1, 1, 2), ParameterError);
}

TEST(MakeFromXi, SpecExamples) {
  Integer d = 1;
  auto q = [&](long a, long b = 1) { return QuadElem(make_rational(a, b), d); };
  DiagForm f = make_from_xi(q(1), q(0), q(1), q(1), 5);
  std::vector<Integer> expect = {0, -5, -10, -10, -5, -1};
  EXPECT_EQ(f.coeffs(), expect);
  EXPECT_EQ(f.D(), 1);
  EXPECT_THROW(make_from_xi(q(1), q(1, 2), q(1), q(0), 5), NotIntegralError);
  EXPECT_THROW(make_from_xi(q(1), q(2), q(3), q(2), 5), DegenerateError);

  // Conjugate data over Q(sqrt 5)
  Integer five = 5;
  QuadElem a1(Rational(1, 2), Rational(1, 2), five), b1(Rational(0), Rational(1), five);
  DiagForm c = make_from_xi(a1, b1, -a1.conj(), b1.conj(), 5, "conjugate");
  EXPECT_EQ(c.D(), 20);  // (x + sqrt5 y)(x - sqrt5 y) = x^2 - 5 y^2
  EXPECT_TRUE(c.scaled_xi_eta_integral());
  // Non-conjugate irrational data is rejected even when integrality would hold coefficient-wise.
  EXPECT_THROW(make_from_xi(a1, b1, a1.conj(), b1.conj(), 5), Error);
}

TEST(EvalF, SpecExamples) {
  EXPECT_EQ(eval_F(make_binomial(1, 1, 5), 1, 0), 1);
  EXPECT_EQ(eval_F(make_binomial(3, 2, 5), 1, 1), 1);
  EXPECT_EQ(eval_F(make_binomial(2, 3, 5), 2, 1), 61);
}

TEST(EvalXiEta, DefiningIdentityAndConjugacy) {
  Rng g(11);
  auto forms = sample_forms(g, 40);
  for (const auto& f : forms) {
    for (int k = 0; k < 20; ++k) {
      Integer x = uniform(g, -30, 30), y = uniform(g, -30, 30);
      auto [xi, eta] = f.eval_xi_eta(x, y);
      EXPECT_EQ(xi - eta, f.field_elem(Rational(f.eval(x, y))));
      if (f.D() < 0) {
        EXPECT_EQ(xi.norm(), eta.norm());
        EXPECT_EQ(eta, -xi.conj());
      }
      // xi eta = chi^r Q^r
      EXPECT_EQ(xi * eta, f.field_elem(f.chi_r() * Rational(ipow(f.quad_value(x, y), f.r()))));
      // (2/chi) u1 v2 lies in the ring of integers
      Integer x2 = uniform(g, -9, 9), y2 = uniform(g, -9, 9);
      EXPECT_TRUE(f.two_over_chi_uv(x, y, x2, y2).is_algebraic_integer());
    }
  }
  auto [xi, eta] = make_binomial(1, 1, 5).eval_xi_eta(1, 0);
  EXPECT_EQ(xi.a(), 1);
  EXPECT_TRUE(eta.is_zero());
}

TEST(Discriminant, BothRoutesAndOracle) {
  Rng g(12);
  auto forms = sample_forms(g, 60);
  for (const auto& f : forms) {
    Discriminant d = discriminant(f);
    EXPECT_EQ(Rational(d.value), sylvester_disc_oracle(f.coeffs())) << f.provenance();
    EXPECT_EQ(abs(Rational(d.value)), Rational(ipow(f.r(), f.r())) * abs(f.j_power()));
    EXPECT_TRUE(d.sign_agrees) << f.provenance();
    EXPECT_TRUE(f.scaled_xi_eta_integral()) << f.provenance();
  }
}

TEST(Discriminant, SignConventionRecorded) {
  // Under the resultant convention x^r - y^r has Disc = (-1)^((r-1)(r-2)/2) r^r.
  for (int r = 3; r <= 12; ++r) {
    Discriminant d = discriminant(make_binomial(1, 1, r));
    Integer expect = ipow(r, r);
    if (((r - 1) * (r - 2) / 2) % 2) expect = -expect;
    EXPECT_EQ(d.value, expect) << r;
    // the identity's sign (-1)^((r-1)(r+2)/2) differs by (-1)^(2(r-1)) = 1 for j = 1
    EXPECT_TRUE(d.sign_agrees) << r;
  }
}

TEST(Gl2Action, InvarianceAndExamples) {
  DiagForm f = make_binomial(1, 1, 5);
  EXPECT_EQ(gl2_action(f, identity2()).coeffs(), f.coeffs());
  DiagForm s = gl2_action(f, Matrix2{{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}});
  std::vector<Integer> neg = {-1, 0, 0, 0, 0, 1};
  EXPECT_EQ(s.coeffs(), neg);
  EXPECT_THROW(gl2_action(f, Matrix2{{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}}}), ParameterError);
  Rng g(13);
  auto forms = sample_forms(g, 12);
  for (const auto& base : forms) {
    Integer d0 = abs(discriminant(base).value);
    for (int k = 0; k < 10; ++k) {
      Matrix2 m = random_unimodular(g);
      DiagForm t = gl2_action(base, m);
      EXPECT_EQ(abs(discriminant(t).value), d0);
      EXPECT_EQ(t.D(), base.D());
      EXPECT_EQ(abs(t.j_power()), abs(base.j_power()));
    }
  }
}

TEST(Hessian, SpecExamplesAndDualRoutes) {
  DiagForm f = make_binomial(1, 1, 5);
  EXPECT_EQ(hessian_value(f, 1, 1), -400);
  EXPECT_EQ(hessian_value(f, 0, 0), 0);
  EXPECT_EQ(hessian_oracle(f.coeffs(), 1, 1), -400);
  Rng g(14);
  auto forms = sample_forms(g, 30);
  for (const auto& h : forms)
    for (int k = 0; k < 30; ++k) {
      Integer x = uniform(g, -50, 50), y = uniform(g, -50, 50);
      Integer v = hessian_value(h, x, y);
      EXPECT_EQ(v, hessian_oracle(h.coeffs(), x, y));
      EXPECT_EQ(Rational(v), hessian_value_identity(h, x, y));
    }
}

TEST(Jacobian, SpecExamplesAndDualRoutes) {
  DiagForm f = make_binomial(1, 1, 5);
  EXPECT_EQ(jacobian_value(f, 0, 0), 0);
  // P = -6000 x^2 y^2 (x^5 + y^5) for x^5 - y^5, so P(1,0) = 0 and P(1,1) = -12000.
  EXPECT_EQ(jacobian_value(f, 1, 0), 0);
  EXPECT_EQ(jacobian_value(f, 1, 1), -12000);
  EXPECT_EQ(jacobian_value(f, 2, 1), -6000 * 4 * 33);
  Rng g(15);
  auto forms = sample_forms(g, 30);
  for (const auto& h : forms)
    for (int k = 0; k < 30; ++k) {
      Integer x = uniform(g, -40, 40), y = uniform(g, -40, 40);
      EXPECT_EQ(Rational(jacobian_value_direct(h, x, y)), jacobian_value_identity(h, x, y)) << h.provenance();
    }
}

TEST(Reduce, GaussExamples) {
  DiagForm base = gaussian_form(5);
  EXPECT_TRUE(base.is_reduced());
  DiagForm skew = gl2_action(base, Matrix2{{{Integer(2), Integer(1)}, {Integer(1), Integer(0)}}});
  EXPECT_EQ(skew.A(), 5);
  EXPECT_EQ(skew.B(), 4);
  EXPECT_EQ(skew.C(), 1);
  EXPECT_FALSE(skew.is_reduced());
  auto [red, m] = reduce(skew);
  EXPECT_EQ(red.A(), 1);
  EXPECT_EQ(red.B(), 0);
  EXPECT_EQ(red.C(), 1);
  EXPECT_EQ(red.D(), -4);
  EXPECT_TRUE(red.is_reduced());
  EXPECT_FALSE(is_reduced_quadratic(2, 3, 1));
  EXPECT_THROW(reduce(make_binomial(2, 3, 5)), UnsupportedError);
}

TEST(Reduce, WitnessMapsSolutionsBijectively) {
  Rng g(16);
  for (int k = 0; k < 20; ++k) {
    DiagForm f = gl2_action(random_trace_form(g, Integer(-3), 5, 2), random_unimodular(g, 6, 4));
    auto [red, m] = reduce(f);
    EXPECT_TRUE(red.is_reduced());
    // red(x, y) = f(m (x, y))
    for (int t = 0; t < 20; ++t) {
      Integer x = uniform(g, -20, 20), y = uniform(g, -20, 20);
      EXPECT_EQ(red.eval(x, y), f.eval(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y));
    }
  }
}

TEST(Json, RoundTripFields) {
  Json j = to_json(make_binomial(3, 2, 5));
  EXPECT_EQ(j["coeffs"][0], "3");
  EXPECT_EQ(j["coeffs"][5], "-2");
  EXPECT_EQ(j["D"], "1");
  EXPECT_EQ(j["chi_r"], "6");
  EXPECT_TRUE(j["gamma1"].is_null());
  DiagForm f = form_from_json(Json::parse(R"({"xi": {"d": -3, "r": 5, "alpha1": ["1/2", "1/2"], "beta1": [0, 1], "gamma1": ["-1/2", "1/2"], "delta1": [0, -1]}})"));
  EXPECT_EQ(f.D(), -12);
  DiagForm big = form_from_json(Json::parse(R"({"binomial": ["123456789012345678901234567890", "7", 5]})"));
  EXPECT_EQ(to_json(big)["coeffs"][0], "123456789012345678901234567890");
  EXPECT_THROW(form_from_json(Json::parse(R"({"nope": 1})")), ParameterError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"binomial": [1, 2]})")), ParameterError);
}
