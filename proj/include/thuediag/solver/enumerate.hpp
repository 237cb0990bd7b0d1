#pragma once

#include <algorithm>
#include <vector>

#include "thuediag/solver/record.hpp"

namespace thuediag {

namespace detail {

using i128 = __int128;

inline bool fits_i128(const Integer& z) { return bit_length(z) <= 120; }

inline i128 to_i128(const Integer& z) {
  Integer a = abs(z);
  i128 out = 0;
  for (long bit = bit_length(a) - 1; bit >= 0; --bit) out = (out << 1) | static_cast<i128>(mpz_tstbit(a.get_mpz_t(), bit));
  return z < 0 ? -out : out;
}

/// Largest |x| in row y that can still satisfy |F| <= h (needs a nonzero x^r coefficient).
inline Integer row_limit(const std::vector<Integer>& c, const Integer& y, const Integer& h) {
  Integer tail = 0;
  for (size_t i = 1; i < c.size(); ++i) tail += abs(c[i]);
  // For |x| >= y: |F| >= |x|^(r-1) (|c0| |x| - tail*y).
  Integer lim = (tail * y + h) / abs(c[0]);
  return std::max(lim, y);
}

}  // namespace detail

/// Primitive canonical solutions of 0 < |F| <= h with |x| <= x_bound, 0 <= y <= y_bound.
inline std::vector<SolutionRecord> enumerate_box(const DiagForm& f, const Integer& h, long x_bound, long y_bound) {
  if (h < 1) throw ParameterError("h must be positive");
  if (x_bound < 1 || y_bound < 1) throw ParameterError("box bounds must be at least 1");
  const auto& c = f.coeffs();
  int r = f.r();
  BinaryForm<Integer> hess = hessian_form(f);
  std::vector<SolutionRecord> out;
  auto keep = [&](long x, long y) { out.push_back(make_record(f, Integer(x), Integer(y), &hess)); };

  if (Integer fx = f.eval(Integer(1), Integer(0)); fx != 0 && abs(fx) <= h) keep(1, 0);

  Integer csum = 0;
  for (const auto& v : c) csum += abs(v);
  Integer reach = ipow(Integer(std::max(x_bound, y_bound)), r) * csum;
  bool fast = detail::fits_i128(reach) && detail::fits_i128(h);
  detail::i128 h128 = fast ? detail::to_i128(h) : 0;
  std::vector<detail::i128> c128;
  if (fast)
    for (const auto& v : c) c128.push_back(detail::to_i128(v));

  std::vector<detail::i128> row(r + 1);
  for (long y = 1; y <= y_bound; ++y) {
    long xl = x_bound;
    if (c[0] != 0) {
      Integer lim = detail::row_limit(c, Integer(y), h);
      if (lim < xl) xl = lim.get_si();
    }
    if (fast) {
      detail::i128 yp = 1;
      for (int i = 0; i <= r; ++i) {
        row[i] = c128[i] * yp;
        yp *= y;
      }
      for (long x = -xl; x <= xl; ++x) {
        detail::i128 acc = row[0];
        for (int i = 1; i <= r; ++i) acc = acc * x + row[i];
        if (acc != 0 && acc <= h128 && acc >= -h128 && std::gcd(x, y) == 1) keep(x, y);
      }
    } else {
      for (long x = -xl; x <= xl; ++x) {
        if (std::gcd(x, y) != 1) continue;
        Integer v = f.eval(Integer(x), Integer(y));
        if (v != 0 && abs(v) <= h) keep(x, y);
      }
    }
  }
  return out;
}

struct ConvergentSearch {
  std::vector<SolutionRecord> solutions;
  Integer crossover;  // below this y every row is scanned exactly
  int depth = 0;      // partial quotients generated
};

namespace detail {

inline Integer eval_poly(const std::vector<Integer>& p, const Integer& t) {
  Integer acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

/// p(t + q), constant term first.
inline std::vector<Integer> taylor_shift(std::vector<Integer> p, const Integer& q) {
  size_t n = p.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t k = n - 1; k > i; --k) p[k - 1] += q * p[k];
  return p;
}

inline Integer iroot_ceil(const Integer& n, unsigned long k) {
  if (n <= 0) return 0;
  Integer r = iroot_floor(n, k);
  return ipow(r, k) == n ? r : r + 1;
}

}  // namespace detail

/// Positive solutions of 0 < |a x^r - b y^r| <= h with y <= y_max. Rows below the crossover
/// are scanned through integer roots; above it a solution forces x/y to be a convergent of
/// (b/a)^(1/r), which are generated exactly by Lagrange's method.
inline ConvergentSearch enumerate_binomial_convergents(const Integer& a, const Integer& b, int r, const Integer& h,
                                                       const Integer& y_max, long bits_budget = 0) {
  if (a < 1 || b < 1) throw ParameterError("a and b must be positive");
  if (h < 1 || y_max < 1) throw ParameterError("h and y_max must be positive");
  if (bits_budget <= 0) bits_budget = cert::default_bits_budget();
  DiagForm f = make_binomial(a, b, r);
  BinaryForm<Integer> hess = hessian_form(f);
  ConvergentSearch out;

  // smallest y with y^(r(r-2)) a b^(r-1) > (2h)^r
  unsigned long e = static_cast<unsigned long>(r) * (r - 2);
  Integer K = a * ipow(b, r - 1), T = ipow(2 * h, r);
  Integer y0 = iroot_floor(T / K, e);
  if (y0 < 1) y0 = 1;
  while (ipow(y0, e) * K <= T) ++y0;
  while (y0 > 1 && ipow(y0 - 1, e) * K > T) --y0;
  out.crossover = y0;

  auto consider = [&](const Integer& x, const Integer& y) {
    if (x < 1 || gcd(x, y) != 1) return;
    Integer v = a * ipow(x, r) - b * ipow(y, r);
    if (v != 0 && abs(v) <= h) out.solutions.push_back(make_record(f, x, y, &hess));
  };

  Integer band_end = std::min(Integer(y0 - 1), y_max);
  for (Integer y = 1; y <= band_end; ++y) {
    Integer N = b * ipow(y, r);
    Integer lo = N - h, hi = N + h;
    Integer xmin = lo <= a ? Integer(1) : detail::iroot_ceil(ceil_q(make_rational(lo, a)), r);
    Integer xmax = iroot_floor(hi / a, r);
    for (Integer x = xmin; x <= xmax; ++x) consider(x, y);
  }
  if (y0 > y_max) return out;

  // Continued fraction of the positive root of a t^r - b.
  std::vector<Integer> P(r + 1, Integer(0));
  P[0] = -b;
  P[r] = a;
  Integer pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
  bool first = true;
  for (;;) {
    Integer qk;
    bool exact = false;
    if (first) {
      qk = iroot_floor(b / a, r);
      exact = a * ipow(qk, r) == b;
    } else {
      int s_lead = sgn(P.back());
      auto below = [&](const Integer& t) { return sgn(detail::eval_poly(P, t)) == -s_lead; };
      Integer lo = 1, hi = 2;
      while (below(hi)) {
        lo = hi;
        hi *= 2;
      }
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        (below(mid) ? lo : hi) = mid;
      }
      qk = lo;
      if (detail::eval_poly(P, lo + 1) == 0) {
        qk = lo + 1;
        exact = true;
      }
    }
    first = false;
    ++out.depth;
    Integer p_cur = qk * pm1 + pm2, q_cur = qk * qm1 + qm2;
    pm2 = pm1;
    qm2 = qm1;
    pm1 = p_cur;
    qm1 = q_cur;
    if (q_cur > y_max) break;
    if (q_cur >= y0) consider(p_cur, q_cur);
    if (exact) break;
    P = detail::taylor_shift(P, qk);
    std::reverse(P.begin(), P.end());
    long bits = 0;
    for (const auto& c : P) bits = std::max(bits, bit_length(c));
    if (bits > bits_budget * 8) throw PrecisionExhausted("continued fraction coefficients exceed the budget at depth " + std::to_string(out.depth), out.depth);
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const SolutionRecord& l, const SolutionRecord& r) { return l.y < r.y || (l.y == r.y && l.x < r.x); });
  return out;
}

}  // namespace thuediag
