#pragma once

#include <map>
#include <string>
#include <vector>

#include "thuediag/exactnum.hpp"

namespace thuediag::criteria {

struct Factorization {
  std::map<Integer, int> primes;
  std::vector<Integer> unfactored;  // composite cofactors left when the budget ran out

  std::string str() const {
    std::string out;
    for (const auto& [p, e] : primes) out += (out.empty() ? "" : "*") + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    for (const auto& c : unfactored) out += (out.empty() ? "" : "*") + ("[" + c.get_str() + "]");
    return out.empty() ? "1" : out;
  }
};

class FactorizationBudgetExceeded : public Error {
 public:
  FactorizationBudgetExceeded(const std::string& what, Factorization partial) : Error(what), partial_(std::move(partial)) {}
  const Factorization& partial() const noexcept { return partial_; }

 private:
  Factorization partial_;
};

namespace detail {

inline bool is_prime(const Integer& n) {
  // 25 Miller-Rabin rounds after a BPSW test; deterministic below 2^64
  return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

inline const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> ps = [] {
    const unsigned long lim = 1UL << 16;
    std::vector<bool> sieve(lim + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= lim; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long k = i * i; k <= lim; k += i) sieve[k] = false;
    }
    return out;
  }();
  return ps;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 once `budget` steps are spent.
inline Integer pollard_brent(const Integer& n, long& budget) {
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    for (unsigned long len = 1; g == 1 && budget > 0; len *= 2) {
      x = y;
      for (unsigned long i = 0; i < len; ++i) y = step(y);
      for (unsigned long k = 0; k < len && g == 1 && budget > 0; k += 64) {
        ys = y;
        for (unsigned long i = 0; i < std::min(64UL, len - k); ++i) {
          y = step(y);
          q = q * abs(Integer(x - y)) % n;
        }
        budget -= 64;
        g = gcd(q, n);
      }
    }
    if (g == n) {
      // the batched product overshot; replay one step at a time
      do {
        ys = step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace detail

/// Trial division by primes below 2^16, then Pollard-Brent on what is left.
inline Factorization factorize(Integer n, long budget = 1L << 22) {
  if (n < 1) throw ParameterError("factorize needs n >= 1");
  Factorization out;
  for (unsigned long p : detail::small_primes()) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out.primes[Integer(p)];
      n /= p;
    }
  }
  std::vector<Integer> todo;
  if (n > 1) todo.push_back(n);
  while (!todo.empty()) {
    Integer m = todo.back();
    todo.pop_back();
    if (detail::is_prime(m)) {
      ++out.primes[m];
      continue;
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    if (root * root == m) {
      todo.push_back(root);
      todo.push_back(root);
      continue;
    }
    Integer d = detail::pollard_brent(m, budget);
    if (d == 0) {
      out.unfactored.push_back(m);
      out.unfactored.insert(out.unfactored.end(), todo.begin(), todo.end());
      throw FactorizationBudgetExceeded("factorization budget exceeded on " + m.get_str(), out);
    }
    todo.push_back(d);
    todo.push_back(m / d);
  }
  return out;
}

/// Number of distinct prime divisors.
inline int omega(const Integer& n, long budget = 1L << 22) { return static_cast<int>(factorize(n, budget).primes.size()); }

}  // namespace thuediag::criteria
