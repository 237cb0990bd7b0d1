#include <gtest/gtest.h>

#include "thuediag/pade.hpp"

using namespace thuediag;
using namespace thuediag::pade;

namespace {

Poly P(std::initializer_list<Rational> c) { return Poly(c); }

// A^r - (1 - z) B^r shares the vanishing order of A - (1-z)^(1/r) B, since the cofactor
// sum A^(r-1-i) ((1-z)^(1/r) B)^i is a unit at z = 0. Pure polynomial arithmetic.
int power_route_order(const PadePair& p) {
  Poly ar{Rational(1)}, br{Rational(1)};
  for (int i = 0; i < p.r; ++i) {
    ar = poly_mul(ar, p.a);
    br = poly_mul(br, p.b);
  }
  Poly diff = poly_sub(ar, poly_sub(br, poly_mul(P({Rational(0), Rational(1)}), br)));
  return vanishing_order(diff);
}

}  // namespace

TEST(Pade, FrozenCoefficients) {
  PadePair p = build(1, 0, 5);
  EXPECT_EQ(p.a, P({Rational(2), Rational(-6, 5)}));
  EXPECT_EQ(p.b, P({Rational(2), Rational(-4, 5)}));

  PadePair q = build(1, 1, 5);
  EXPECT_EQ(q.a.size(), 2u);
  EXPECT_EQ(q.b.size(), 1u);

  // values from an independent fraction-arithmetic expansion
  PadePair s = build(3, 1, 7);
  EXPECT_EQ(s.a, P({Rational(10), Rational(-90, 7), Rational(180, 49), Rational(-20, 343)}));
  EXPECT_EQ(s.b, P({Rational(10), Rational(-80, 7), Rational(130, 49)}));
}

TEST(Pade, ConstantTermIsCentralBinomial) {
  for (int r = 3; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; g <= 1; ++g) {
        PadePair p = build(n, g, r);
        EXPECT_EQ(p.a[0], Rational(binomial(2 * n - g, n)));
        EXPECT_EQ(p.a[0], p.b[0]);
      }
}

TEST(Pade, RemainderFrozen) {
  EXPECT_EQ(remainder_series(build(1, 0, 5), 4), P({0, 0, 0, Rational(4, 125), Rational(18, 625)}));
  EXPECT_EQ(remainder_series(build(1, 1, 5), 3), P({0, 0, Rational(2, 25), Rational(6, 125)}));
  auto s = remainder_series(build(2, 1, 5), 6);
  EXPECT_EQ(vanishing_order(s), 4);
  EXPECT_EQ(s[4], Rational(9, 625));
}

TEST(Pade, OrderOfVanishing) {
  for (int r = 5; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; g <= 1; ++g) {
        PadePair p = build(n, g, r);
        auto s = remainder_series(p, 2 * n + 2 - g);
        EXPECT_EQ(vanishing_order(s), 2 * n + 1 - g) << n << " " << g << " " << r;
        EXPECT_EQ(power_route_order(p), 2 * n + 1 - g) << n << " " << g << " " << r;
      }
}

TEST(Pade, Contiguity) {
  std::vector<Rational> pts = {Rational(0), Rational(1), Rational(-3, 7), Rational(5, 2), Rational(11)};
  EXPECT_TRUE(contiguity_check(1, 0, 5, pts));
  EXPECT_TRUE(contiguity_check(3, 1, 7, pts));
  for (int r = 3; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; g <= 1; ++g) {
        EXPECT_TRUE(contiguity_check(n, g, r, pts));
        EXPECT_TRUE(c_positive(n, g, r));
      }
}

TEST(Pade, ContiguityDetectsCorruption) {
  PadePair p = build(2, 0, 5);
  Poly c = c_poly(2, 0, 5);
  c[1] += 1;
  EXPECT_FALSE(poly_equal(c, compose_one_minus(p.a)));
}

TEST(Pade, SupBounds) {
  for (int r = 5; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; g <= 1; ++g) {
        auto rep = sup_bound_check(build(n, g, r), standard_samples(20));
        EXPECT_TRUE(rep.ok);
        EXPECT_EQ(rep.checked, 20);
      }
  // equality at z = 0, the far disc at z = -1, and a skipped far sample
  PadePair p = build(4, 1, 7);
  EXPECT_EQ(poly_eval(p.a, Gaussian{}).abs_sq(), Rational(binomial(7, 4) * binomial(7, 4)));
  auto rep = sup_bound_check(p, {Gaussian{}, Gaussian{Rational(-1), 0}, Gaussian{Rational(1), 0}, Gaussian{Rational(-5), 0}});
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.checked, 3);
  EXPECT_EQ(rep.skipped, 1);
}

TEST(Pade, Wronskian) {
  EXPECT_EQ(wronskian_at_one(1, 0, 5), Rational(-4, 25));
  EXPECT_EQ(wronskian_at_one(1, 1, 5), Rational(12, 125));
  EXPECT_EQ(wronskian_at_one(2, 1, 7), Rational(780, 16807));
  auto w = wronskian_poly(1, 1, 5);
  EXPECT_EQ(vanishing_order(w), 3);
  for (int r = 3; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int I = 0; I <= 1; ++I) {
        Rational c = wronskian_at_one(n, I, r);
        EXPECT_NE(c, 0);
        Poly expect(2 * n + I + 1, Rational(0));
        expect.back() = c;
        EXPECT_TRUE(poly_equal(wronskian_poly(n, I, r), expect)) << n << " " << I << " " << r;
      }
}

TEST(Pade, IntegralityT) {
  EXPECT_EQ(integrality_t(1, 5, 2), Integer(-50));
  EXPECT_EQ(integrality_t(1, 5, 1), Integer(5));
  for (long a = -7; a <= 7; ++a) EXPECT_EQ(integrality_t(a, 7, 0), Integer(1));
  for (int r = 1; r <= 12; ++r)
    for (long a = -r; a <= r; ++a)
      for (unsigned long m = 0; m <= 30; ++m) EXPECT_NO_THROW(integrality_t(a, r, m));
  // without the r^(2m) factor the value is not integral
  EXPECT_FALSE(is_integer(binomial(make_rational(1, 5), 2)));
}

TEST(Pade, StarPolynomialsIntegral) {
  for (long d : {-3L, -4L, 5L, 12L, -23L})
    for (int r : {5, 6, 7})
      for (int n = 1; n <= 4; ++n)
        for (int g = 0; g <= 1; ++g) {
          PadePair p = build(n, g, r);
          for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
              for (long c = -2; c <= 2; ++c) {
                QuadElem lam{Rational(a), Rational(b), Integer(d)};
                EXPECT_TRUE(star_integral(p, lam, Integer(c)));
              }
          // half-integral lambda in Q(sqrt 5) is still in the ring of integers
          if (d == 5) {
            EXPECT_TRUE(star_integral(p, QuadElem(Rational(1, 2), Rational(1, 2), Integer(5)), Integer(3)));
          }
        }
  // dropping the sqrt(D) r^2 scaling breaks integrality
  PadePair p = build(2, 0, 5);
  QuadElem one(Rational(1), Integer(-3));
  EXPECT_FALSE(homogenized(p.a, one, one).is_algebraic_integer());
}

TEST(Pade, RemainderBound) {
  std::vector<Rational> zs = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-2, 5), Rational(1, 7), Rational(0)};
  for (int r = 5; r <= 9; ++r)
    for (int n = 1; n <= 6; ++n)
      for (int g = 0; g <= 1; ++g)
        for (const auto& z : zs) EXPECT_TRUE(remainder_bound_check(build(n, g, r), z).ok) << n << g << r << z;
  EXPECT_THROW(remainder_bound_check(build(1, 0, 5), Rational(3, 4)), ParameterError);
}

TEST(Pade, ParameterErrors) {
  EXPECT_THROW(build(0, 0, 5), ParameterError);
  EXPECT_THROW(build(1, 2, 5), ParameterError);
  EXPECT_THROW(build(1, 0, 2), ParameterError);
  EXPECT_THROW(wronskian_at_one(1, 2, 5), ParameterError);
}
