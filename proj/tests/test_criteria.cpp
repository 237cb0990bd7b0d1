#include <gtest/gtest.h>

#include <cmath>

#include "thuediag/criteria.hpp"

using namespace thuediag;
using namespace thuediag::criteria;

namespace {

Integer big(const char* s) { return Integer(s); }

int omega_oracle(long n) {
  int w = 0;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++w;
      while (n % p == 0) n /= p;
    }
  return w + (n > 1);
}

std::vector<DiagForm> small_forms(int count, uint64_t seed) {
  Rng g(seed);
  const long ds[] = {-3, -4, -7, -11, 5, 8, 13};
  std::vector<DiagForm> out;
  for (int i = 0; i < count; ++i) {
    int r = 6 + i % 3;
    DiagForm f = i % 4 == 3 ? random_split_form(g, r, 3) : random_trace_form(g, Integer(ds[i % 7]), r, 2);
    out.push_back(f.D() < 0 ? reduce(f).first : f);
  }
  return out;
}

// Binomials large enough for every Delta'-type hypothesis at h = 1.
std::vector<DiagForm> huge_binomials() {
  return {make_binomial(ipow(10, 90) + 4, ipow(10, 90) + 3, 5), make_binomial(ipow(3, 200) + 1, ipow(3, 200), 6),
          make_binomial(ipow(10, 170) + 2, ipow(10, 170) + 1, 7)};
}

// Records spread over many scales; they need not satisfy any inequality, only F != 0.
Observed spread_records(const DiagForm& f) {
  Observed o{{}, "synthetic"};
  for (long y : {0L, 1L, 3L, 11L, 40L, 150L, 613L, 2500L, 10007L, 90001L})
    for (long x : {1L, -1L, 2 * y + 1, -3 * y - 1, 5 * y + 2})
      if (std::gcd(x, y) == 1 && f.eval(Integer(x), Integer(y)) != 0) o.solutions.push_back(make_record(f, Integer(x), Integer(y)));
  return o;
}

}  // namespace

TEST(DeltaPrime, Examples) {
  DiagForm f = make_binomial(Integer(1), Integer(1), 5);
  EXPECT_EQ(delta_prime(f, Integer(1)), Rational(3125) / Rational(ipow(2, 20) * ipow(5, 5)));
  for (long h = 1; h <= 64; h *= 2) EXPECT_EQ(delta_prime(f, Integer(h)) / delta_prime(f, Integer(2 * h)), Rational(ipow(2, 8)));
  Rng g(3);
  for (int i = 0; i < 30; ++i) {
    Integer a(uniform(g, 1, 500)), b(uniform(g, 1, 500));
    int r = 5 + i % 4;
    Rational want = Rational(ipow(Integer(a * b), r - 1)) / Rational(ipow(2, static_cast<unsigned long>(r * r - r)));
    EXPECT_EQ(delta_prime(make_binomial(a, b, r), Integer(1)), want);
  }
  EXPECT_THROW(delta_prime(f, Integer(0)), ParameterError);
}

TEST(Omega, SmallValues) {
  EXPECT_EQ(omega(Integer(1)), 0);
  EXPECT_EQ(omega(Integer(12)), 2);
  EXPECT_EQ(omega(Integer(30)), 3);
  for (long n = 1; n <= 3000; ++n) EXPECT_EQ(omega(Integer(n)), omega_oracle(n)) << n;
  EXPECT_THROW(omega(Integer(0)), ParameterError);
}

TEST(Omega, LargeFactors) {
  Integer p = big("1000000000039"), q = big("1000000000061"), s = big("4294967311");
  EXPECT_EQ(omega(p * q), 2);
  EXPECT_EQ(omega(p * p * q * 6), 4);
  EXPECT_EQ(omega(s * s), 1);
  Factorization fz = factorize(p * q * 12);
  EXPECT_EQ(fz.primes.at(Integer(2)), 2);
  EXPECT_EQ(fz.primes.at(p), 1);
  EXPECT_EQ(fz.primes.at(q), 1);
  // two 100-bit primes, far past a tiny budget; the partial factorization keeps the 2
  Integer P, Q;
  mpz_nextprime(P.get_mpz_t(), Integer(ipow(2, 100)).get_mpz_t());
  mpz_nextprime(Q.get_mpz_t(), Integer(ipow(2, 101)).get_mpz_t());
  try {
    factorize(2 * P * Q, 1000);
    FAIL() << "expected budget exhaustion";
  } catch (const FactorizationBudgetExceeded& e) {
    EXPECT_EQ(e.partial().primes.at(Integer(2)), 1);
    ASSERT_EQ(e.partial().unfactored.size(), 1u);
    EXPECT_EQ(e.partial().unfactored[0], P * Q);
  }
}

TEST(BoundTable, Rows) {
  auto v = [](Theorem t, FormCase c, int r, int k = 0, int w = 0) { return bound_table(t, c, r, k, w).value; };
  using FC = FormCase;
  EXPECT_EQ(v(Theorem::T1_3, FC::d_negative, 7), 15);
  EXPECT_EQ(v(Theorem::T1_3, FC::even_indefinite, 6), 5);
  EXPECT_EQ(v(Theorem::T1_3, FC::odd_indefinite, 7), 3);
  EXPECT_EQ(v(Theorem::T1_3, FC::definite, 6), 1);
  EXPECT_EQ(v(Theorem::T1_4, FC::d_negative, 5, 4), 20);
  EXPECT_EQ(v(Theorem::T1_4, FC::even_indefinite, 6, 4), 8);
  EXPECT_EQ(v(Theorem::T1_4, FC::odd_indefinite, 5, 4), 4);
  EXPECT_EQ(v(Theorem::T1_4, FC::definite, 6, 4), 1);
  EXPECT_EQ(v(Theorem::C1_5, FC::d_negative, 5), 15);
  EXPECT_EQ(v(Theorem::C1_5, FC::even_indefinite, 6), 6);
  EXPECT_EQ(v(Theorem::T2_1, FC::d_negative, 5, 2), 20);
  EXPECT_EQ(v(Theorem::T2_1, FC::even_indefinite, 6, 3), 12);
  EXPECT_EQ(v(Theorem::T2_1, FC::odd_indefinite, 5, 1), 2);
  EXPECT_EQ(v(Theorem::T1_9, FC::d_negative, 5, 0, 0), 15);
  EXPECT_EQ(v(Theorem::T1_9, FC::d_negative, 5, 0, 2), 375);
  EXPECT_EQ(v(Theorem::T1_9, FC::even_indefinite, 6, 0, 1), 36);
  EXPECT_EQ(v(Theorem::T1_9, FC::odd_indefinite, 5, 0, 0), 3);
  EXPECT_EQ(v(Theorem::T1_9, FC::definite, 6, 0, 2), 36);
  EXPECT_EQ(v(Theorem::T1_2, FC::odd_indefinite, 5, 2, 2), 50);
  EXPECT_EQ(v(Theorem::T1_1, FC::odd_indefinite, 9), 3);
}

TEST(BoundTable, FormCases) {
  EXPECT_EQ(form_case(make_binomial(Integer(3), Integer(2), 5)), FormCase::odd_indefinite);
  EXPECT_EQ(form_case(make_binomial(Integer(3), Integer(2), 6)), FormCase::even_indefinite);
  EXPECT_EQ(form_case(make_diagonal(Integer(1), Integer(-5), 6)), FormCase::definite);
  Rng g(1);
  EXPECT_EQ(form_case(random_trace_form(g, Integer(-7), 6, 2)), FormCase::d_negative);
}

TEST(T1_4, MThreeIsC1_5) {
  for (int r = 5; r <= 14; ++r) {
    auto [a1, a2] = alpha_exponents(r, 3);
    EXPECT_EQ(a1, make_rational(7 * r * (r - 1), r - 4));
    EXPECT_EQ(a2, make_rational((r - 1) * (r * r + r + 2), r * (r - 4)));
  }
  std::vector<DiagForm> forms = small_forms(12, 5);
  for (const auto& f : huge_binomials()) forms.push_back(f);
  for (const auto& f : forms)
    for (long h : {1L, 2L, 50L}) {
      Observed obs = observe_box(f, Integer(h), 8, 8);
      TheoremVerdict a = check_T1_4(f, Integer(h), 3, obs), b = check_C1_5(f, Integer(h), obs);
      EXPECT_EQ(a.hypothesis_holds, b.hypothesis_holds);
      EXPECT_EQ(a.bound, b.bound);
      EXPECT_EQ(a.pass, b.pass);
    }
  EXPECT_THROW(check_T1_4(forms[0], Integer(1), 2, {}), ParameterError);
}

TEST(Hypotheses, HugeBinomialsHoldAndPass) {
  for (const auto& f : huge_binomials()) {
    Observed obs = observe_box(f, Integer(1), 30, 30);
    std::vector<TheoremVerdict> vs = {check_T1_4(f, Integer(1), 3, obs), check_C1_5(f, Integer(1), obs), check_T1_9(f, Integer(1), obs),
                                      check_T2_1(f, Integer(1), 3, obs), check_T1_8(f, Integer(1), 3, obs)};
    if (f.r() >= 6) vs.push_back(check_T1_3(f, Integer(1), obs));
    for (const auto& v : vs) {
      EXPECT_TRUE(v.hypothesis_holds) << v.id() << " r=" << f.r();
      EXPECT_EQ(v.pass, std::optional<bool>(true)) << v.id();
    }
    EXPECT_GE(obs.solutions.size(), 1u);  // (1, 1)
  }
  EXPECT_LE(check_C1_5(huge_binomials()[0], Integer(1), observe_box(huge_binomials()[0], Integer(1), 30, 30)).bound, 3);
}

TEST(Hypotheses, SmallFormNotApplicable) {
  DiagForm f = make_binomial(Integer(1), Integer(1), 5);
  TheoremVerdict v = check_T1_4(f, Integer(1), 3, observe_box(f, Integer(1), 10, 10));
  EXPECT_FALSE(v.hypothesis_holds);
  EXPECT_FALSE(v.pass.has_value());
  EXPECT_FALSE(v.exact_trace.empty());
  EXPECT_FALSE(v.exact_trace[0].result);
}

TEST(Hypotheses, MonotoneInH) {
  std::vector<DiagForm> forms = small_forms(6, 9);
  for (const auto& f : huge_binomials()) forms.push_back(f);
  forms.push_back(make_binomial(ipow(10, 40), ipow(10, 40) + 1, 6));
  int flips = 0;
  for (const auto& f : forms) {
    bool prev3 = true, prev4 = true, prev21 = true;
    for (long h = 1; h <= 1L << 40; h *= 8) {
      Integer H(h);
      bool t3 = f.r() >= 6 && check_T1_3(f, H, {}).hypothesis_holds;
      bool t4 = check_T1_4(f, H, 4, {}).hypothesis_holds;
      bool t21 = check_T2_1(f, H, 2, {}).hypothesis_holds;
      EXPECT_TRUE(prev3 || !t3);
      EXPECT_TRUE(prev4 || !t4);
      EXPECT_TRUE(prev21 || !t21);
      flips += (prev4 && !t4);
      prev3 = f.r() < 6 || t3;
      prev4 = t4;
      prev21 = t21;
    }
  }
  EXPECT_GT(flips, 0);
}

TEST(Hypotheses, ThresholdOracle) {
  // C1_5 threshold r^(7r(r-1)/(r-4)) h^((r-1)(r^2+r+2)/(r(r-4))) against floating logs
  Rng g(21);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    int r = 5 + i % 4;
    Integer a = ipow(10, uniform(g, 10, 60)) + uniform(g, 1, 99), b = ipow(10, uniform(g, 10, 60)) + uniform(g, 1, 99);
    long h = uniform(g, 1, 5000);
    DiagForm f = make_binomial(a, b, r);
    long double lhs = (r - 1) * (std::log((long double)a.get_d()) + std::log((long double)b.get_d())) - (r * r - r) * std::log(2.0L) -
                      (2 * r - 2) * std::log((long double)h);
    long double rhs = 7.0L * r * (r - 1) / (r - 4) * std::log((long double)r) +
                      (long double)(r - 1) * (r * r + r + 2) / (r * (r - 4)) * std::log((long double)h);
    if (std::fabs(lhs - rhs) < 1e-6) continue;
    EXPECT_EQ(check_C1_5(f, Integer(h), {}).hypothesis_holds, lhs > rhs) << a << " " << b << " " << r << " " << h;
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(T1_1, ConsecutiveCoefficients) {
  TheoremVerdict v = check_T1_1(Integer(3), Integer(2), Integer(1), 5, Integer(10000));
  EXPECT_FALSE(v.hypothesis_holds);
  EXPECT_EQ(v.observed, 1);
  EXPECT_FALSE(v.pass.has_value());
}

TEST(T1_1, Threshold) {
  // 2^5 5^35 c^(2 + 32/5) at c = 1
  Integer t = ipow(2, 5) * ipow(5, 35);
  EXPECT_TRUE(check_T1_1(ipow(2, 5), ipow(5, 35), Integer(1), 5, Observed{}).hypothesis_holds);
  EXPECT_FALSE(check_T1_1(t - 1, Integer(1), Integer(1), 5, Observed{}).hypothesis_holds);
  EXPECT_TRUE(check_T1_1(t, Integer(1), Integer(1), 5, Observed{}).hypothesis_holds);
  EXPECT_FALSE(check_T1_1(t, Integer(1), Integer(2), 5, Observed{}).hypothesis_holds);
  // monotone in c
  Integer a = ipow(10, 40) + 1, b = ipow(10, 45) + 3;
  bool prev = true;
  int flips = 0;
  for (long c = 1; c <= 1L << 30; c *= 4) {
    bool now = check_T1_1(a, b, Integer(c), 5, Observed{}).hypothesis_holds;
    EXPECT_TRUE(prev || !now);
    flips += prev && !now;
    prev = now;
  }
  EXPECT_EQ(flips, 1);
}

TEST(T1_1, HugeCoefficientsPass) {
  for (int r : {5, 7}) {
    Integer a = ipow(10, 60) + 1;
    TheoremVerdict v = check_T1_1(a + 1, a, Integer(1), r, Integer(100000));
    EXPECT_TRUE(v.hypothesis_holds);
    EXPECT_EQ(v.observed, 1);
    EXPECT_EQ(v.pass, std::optional<bool>(true));
  }
}

TEST(T1_2, Thresholds) {
  Integer a = ipow(7, 200), b = ipow(11, 200);
  TheoremVerdict v = check_T1_2(a, b, Integer(12), 5, Integer(1000));
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_EQ(v.bound, 50);  // omega(12) = 2
  EXPECT_EQ(v.pass, std::optional<bool>(true));
  // between the two thresholds: 3 r^omega
  Integer mid = ipow(5, 60);
  v = check_T1_2(mid + 1, mid, Integer(1), 5, Integer(1000));
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_EQ(v.bound, 3);
  EXPECT_EQ(v.observed, 1);
  // gcd(c, rab) > 1
  v = check_T1_2(a, b, Integer(7), 5, Integer(1000));
  EXPECT_FALSE(v.hypothesis_holds);
  EXPECT_EQ(t12_strong_exponent(5), Rational(913, 4));
}

TEST(C1_6, WindowAndM) {
  for (int r = 5; r <= 10; ++r) {
    Rational eps = make_rational(1, 4 * (r - 1));
    int m = epsilon_m(r, eps);
    EXPECT_LT(epsilon_floor(r, m), eps);
    if (m > 3 && ipow(r - 1, static_cast<unsigned long>(m - 2)) - 2 * r - 1 > 0) {
      EXPECT_GE(epsilon_floor(r, m - 1), eps);
    }
  }
  EXPECT_THROW(epsilon_m(5, make_rational(1, 8)), ParameterError);
  EXPECT_THROW(epsilon_m(5, Rational(0)), ParameterError);
}

TEST(C1_6, CeilingOracle) {
  Rng g(5);
  for (int i = 0; i < 300; ++i) {
    int base = 4 + i % 6;
    Rational q(uniform(g, 2, 100000), uniform(g, 1, 37));
    long double x = std::log((long double)q.get_d()) / std::log((long double)base);
    if (std::fabs(x - std::round(x)) < 1e-9) continue;
    EXPECT_EQ(ceil_log_ratio(q, base), Integer((long)std::ceil(x))) << q << " " << base;
  }
  // exact powers and their neighbours
  bool on_power = false;
  EXPECT_EQ(ceil_log_ratio(Rational(25), 5, 0, &on_power), 2);
  EXPECT_TRUE(on_power);
  EXPECT_EQ(ceil_log_ratio(Rational(ipow(7, 30)), 7), 30);
  Rational tiny(1, ipow(10, 30));
  EXPECT_EQ(ceil_log_ratio(Rational(25) + tiny, 5), 3);
  EXPECT_EQ(ceil_log_ratio(Rational(25) - tiny, 5), 2);
  EXPECT_EQ(ceil_log_ratio(Rational(1, 25), 5), -2);
  EXPECT_THROW(ceil_log_ratio(Rational(ipow(5, 200) + 1, ipow(5, 200)), 5, 128), PrecisionExhausted);
}

TEST(C1_6, BoundNonincreasingInEpsilon) {
  Rng g(2);
  DiagForm f = reduce(random_trace_form(g, Integer(-7), 6, 2)).first;
  Integer prev = -1;
  for (long k = 11; k <= 4000; k = k * 3 / 2) {
    // epsilon decreasing as k grows
    TheoremVerdict v = check_C1_6(f, Integer(1), make_rational(1, k), {});
    if (prev >= 0) {
      EXPECT_GE(v.bound, prev);
    }
    prev = v.bound;
  }
  // 1/(4 eps) = 25 = 5^2 at r = 6
  TheoremVerdict v = check_C1_6(f, Integer(1), Rational(1, 100), {});
  EXPECT_EQ(v.bound, 36);
  EXPECT_EQ(v.exact_trace.back().route, "exact");
}

TEST(C1_6, PositiveDUsesWindowM) {
  DiagForm f = huge_binomials()[1];
  Rational eps(1, 40);
  TheoremVerdict v = check_C1_6(f, Integer(1), eps, observe_box(f, Integer(1), 20, 20));
  int m = epsilon_m(6, eps);
  EXPECT_EQ(v.bound, 2 * m);
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_EQ(v.pass, std::optional<bool>(true));
}

TEST(T1_7, Preconditions) {
  EXPECT_THROW(check_T1_7(make_binomial(Integer(3), Integer(2), 7), Integer(1), 2, {}), DomainError);
  Rng g(8);
  DiagForm f = reduce(random_trace_form(g, Integer(-3), 6, 2)).first;
  EXPECT_THROW(check_T1_7(f, Integer(1), 1, {}), ParameterError);
  DiagForm f5 = reduce(random_trace_form(g, Integer(-3), 5, 2)).first;
  EXPECT_THROW(check_T1_7(f5, Integer(1), 2, {}), ParameterError);
  // nothing passes the filter: vacuous
  TheoremVerdict v = check_T1_7(f, Integer(1), 2, {});
  EXPECT_EQ(v.observed, 0);
  EXPECT_EQ(v.pass, std::optional<bool>(true));
}

TEST(T1_7, FilterOracle) {
  Rng g(17);
  const long ds[] = {-3, -4, -7, -8, -11, -15, -20};
  int counted = 0, compared = 0;
  for (int i = 0; i < 60; ++i) {
    DiagForm f = reduce(random_trace_form(g, Integer(ds[i % 7]), 6 + i % 2, 1 + i % 3)).first;
    long h = 1 + 40 * (i % 5);
    Observed obs = spread_records(f);
    for (int m : {2, 3}) {
      TheoremVerdict v = check_T1_7(f, Integer(h), m, obs);
      int r = f.r();
      bool jge1 = f.j_abs_2r() >= 1;
      EXPECT_EQ(jge1, v.exact_trace[0].result);
      auto [i1, i2, i3] = yl_exponents(r, m, jge1);
      long double logj = std::log((long double)f.j_abs_2r().get_d()) / (2 * r);
      long double yl = i1.get_d() * std::log((long double)r) + i2.get_d() * std::log((long double)h) - i3.get_d() * logj;
      long want = 0;
      bool close = false;
      for (const auto& s : obs.solutions) {
        if (s.y == 0) continue;
        long double ly = std::log((long double)Integer(abs(s.y)).get_d());
        close = close || std::fabs(ly - yl) < 1e-9;
        want += ly >= yl;
      }
      if (close) continue;
      EXPECT_EQ(v.observed, want);
      EXPECT_EQ(v.pass, std::optional<bool>(v.observed <= m * r));
      counted += want;
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
  EXPECT_GT(counted, 0);
}

TEST(T1_8, FilterOracle) {
  int counted = 0;
  std::vector<DiagForm> forms = small_forms(30, 31);
  forms.push_back(make_binomial(Integer(2), Integer(1), 5));
  for (const auto& f : forms) {
    long h = 1 + 7 * f.r();
    Observed obs = spread_records(f);
    for (int m : {3, 4}) {
      TheoremVerdict v = check_T1_8(f, Integer(h), m, obs);
      int r = f.r();
      bool jge1 = f.j_abs_2r() >= 1;
      auto [i4, i5, i6] = hl_exponents(r, m, jge1);
      long double logj = std::log((long double)f.j_abs_2r().get_d()) / (2 * r);
      long double hl = i4.get_d() * std::log((long double)r) + i5.get_d() * std::log((long double)h) + i6.get_d() * logj;
      long want = 0;
      bool close = false;
      for (const auto& s : obs.solutions) {
        if (s.hessian == 0) continue;
        long double lh = std::log(std::fabs((long double)s.hessian.get_d()));
        close = close || std::fabs(lh - hl) < 1e-9;
        want += lh >= hl;
      }
      if (close) continue;
      EXPECT_EQ(v.observed, want);
      counted += want;
    }
  }
  EXPECT_GT(counted, 0);
  // a record with uv = 0 has H = 0
  DiagForm b = make_binomial(Integer(2), Integer(1), 5);
  SolutionRecord s = make_record(b, Integer(1), Integer(0));
  EXPECT_EQ(s.hessian, 0);
  EXPECT_EQ(check_T1_8(b, Integer(2), 3, Observed{{s}, "one"}).observed, 0);
}

TEST(T1_9, CasesAndGcd) {
  Integer a = ipow(10, 90) + 4, b = ipow(10, 90) + 3;
  DiagForm f = make_binomial(a, b, 5);
  TheoremVerdict v = check_T1_9(f, Integer(1), observe_box(f, Integer(1), 20, 20));
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_EQ(v.bound, 3);  // omega(1) = 0, r odd, D > 0
  EXPECT_EQ(v.observed, 1);
  // h sharing a factor with Delta = 5^5 (ab)^4
  v = check_T1_9(f, Integer(5), observe_box(f, Integer(5), 20, 20));
  EXPECT_FALSE(v.hypothesis_holds);
  EXPECT_FALSE(v.exact_trace[0].result);
  // observed counts |F| = h exactly
  DiagForm small = make_binomial(Integer(2), Integer(1), 5);
  Observed obs = observe_box(small, Integer(30), 5, 5);
  long exact = 0;
  for (const auto& s : obs.solutions) exact += abs(s.f_value) == 30;
  EXPECT_EQ(check_T1_9(small, Integer(30), obs).observed, exact);
  EXPECT_GT(exact, 0);
}

TEST(Verdicts, TieDirectionInsensitive) {
  DiagForm f = make_binomial(Integer(2), Integer(3), 5);
  auto sols = enumerate_box(f, Integer(200), 20, 20);
  RelatedClassification lo = classify(f, sols, TieBreak::low), hi = classify(f, sols, TieBreak::high);
  ASSERT_GT(lo.ties, 0);
  for (auto fn : {+[](const DiagForm& g, const Observed& o) { return check_C1_5(g, Integer(200), o); },
                  +[](const DiagForm& g, const Observed& o) { return check_T1_8(g, Integer(200), 3, o); },
                  +[](const DiagForm& g, const Observed& o) { return check_T1_9(g, Integer(200), o); }}) {
    EXPECT_EQ(to_json(fn(f, observe(lo, "box"))).dump(), to_json(fn(f, observe(hi, "box"))).dump());
  }
}

TEST(Verdicts, JsonAndReplay) {
  DiagForm f = huge_binomials()[0];
  Observed obs = observe_box(f, Integer(1), 10, 10);
  TheoremVerdict v = check_T2_1(f, Integer(1), 3, obs);
  Json j = to_json(v);
  EXPECT_EQ(j["theorem_id"], "T2_1(l=3)");
  EXPECT_EQ(j["params"]["h"], "1");
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["bound"].is_string());
  EXPECT_EQ(j["exact_trace"][0]["relation"], ">");
  EXPECT_EQ(to_json(check_T2_1(f, Integer(1), 3, obs)).dump(), j.dump());
  EXPECT_TRUE(to_json(check_T1_4(make_binomial(Integer(1), Integer(1), 5), Integer(1), 3, obs))["pass"].is_null());
  EXPECT_THROW(check_T2_1(make_binomial(Integer(1), Integer(1), 5), Integer(1), 4, obs), ParameterError);
}

TEST(Verdicts, SweepHasNoFalsifications) {
  int held = 0;
  for (const auto& f : small_forms(24, 77))
    for (long h : {1L, 10L, 1000L}) {
      Observed obs = observe_box(f, Integer(h), 15, 15);
      std::vector<TheoremVerdict> vs = {check_T1_3(f, Integer(h), obs), check_T1_4(f, Integer(h), 3, obs), check_C1_5(f, Integer(h), obs),
                                        check_T1_8(f, Integer(h), 3, obs), check_T1_9(f, Integer(h), obs),
                                        check_C1_6(f, Integer(h), make_rational(1, 4 * (f.r() - 1)), obs)};
      if (f.D() < 0) vs.push_back(check_T1_7(f, Integer(h), 2, obs));
      for (const auto& v : vs) {
        EXPECT_FALSE(v.falsified()) << v.id();
        held += v.hypothesis_holds;
      }
    }
  EXPECT_GT(held, 50);
}
