#pragma once

#include <random>
#include <string>

#include "thuediag/forms/diag_form.hpp"

namespace thuediag {

using Rng = std::mt19937_64;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline long nonzero_uniform(Rng& g, long bound) {
  long v = 0;
  while (v == 0) v = uniform(g, -bound, bound);
  return v;
}

/// Random element of the ring of integers of Q(sqrt d) with coordinates bounded by `bound`.
inline QuadElem random_integral(Rng& g, const Integer& d, long bound, bool nonzero_irrational = false) {
  bool half = d % 4 == 1 || d % 4 == -3;
  for (;;) {
    long a = uniform(g, -bound, bound), b = nonzero_irrational ? nonzero_uniform(g, bound) : uniform(g, -bound, bound);
    if (half && uniform(g, 0, 1) == 1) {
      // (a + b sqrt d)/2 with a, b odd
      a = 2 * a + 1;
      b = 2 * b + 1;
      QuadElem x(make_rational(a, 2), make_rational(b, 2), d);
      if (!x.is_zero()) return x;
      continue;
    }
    QuadElem x(Rational(a), Rational(b), d);
    if (!x.is_zero()) return x;
  }
}

/// Unimodular matrix as a short random product of elementary moves.
inline Matrix2 random_unimodular(Rng& g, int steps = 4, long bound = 3) {
  Matrix2 m = identity2();
  for (int i = 0; i < steps; ++i) {
    long k = uniform(g, -bound, bound);
    switch (uniform(g, 0, 2)) {
      case 0: m = m * Matrix2{{{Integer(1), Integer(k)}, {Integer(0), Integer(1)}}}; break;
      case 1: m = m * Matrix2{{{Integer(1), Integer(0)}, {Integer(k), Integer(1)}}}; break;
      default: m = m * Matrix2{{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}}; break;
    }
  }
  return m;
}

/// F = Tr(alpha (x + beta y)^r) over a non-square d.
inline DiagForm random_trace_form(Rng& g, const Integer& d, int r, long bound) {
  QuadElem alpha = random_integral(g, d, bound);
  QuadElem beta = random_integral(g, d, bound, true);
  QuadElem one(Rational(1), d);
  std::string prov = "trace(d=" + d.get_str() + ",alpha=" + alpha.str() + ",beta=" + beta.str() + ",r=" + std::to_string(r) + ")";
  return DiagForm(r, {alpha, one, beta}, {-alpha.conj(), one, beta.conj()}, prov);
}

/// a (p x + q y)^r - b (s x + t y)^r with rational integer data, D a perfect square.
inline DiagForm random_split_form(Rng& g, int r, long bound) {
  for (;;) {
    long a = nonzero_uniform(g, bound), b = nonzero_uniform(g, bound);
    long p = uniform(g, -bound, bound), q = uniform(g, -bound, bound), s = uniform(g, -bound, bound), t = uniform(g, -bound, bound);
    if (p * t - q * s == 0) continue;
    Integer one = 1;
    auto Q = [&](long v) { return QuadElem(Rational(v), one); };
    std::string prov = "split(" + std::to_string(a) + "*(" + std::to_string(p) + "," + std::to_string(q) + ")^" + std::to_string(r) + "-" +
                       std::to_string(b) + "*(" + std::to_string(s) + "," + std::to_string(t) + ")^" + std::to_string(r) + ")";
    return DiagForm(r, {Q(a), Q(p), Q(q)}, {Q(b), Q(s), Q(t)}, prov);
  }
}

}  // namespace thuediag
