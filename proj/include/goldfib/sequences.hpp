#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "goldfib/golden_ring.hpp"
#include "goldfib/scalar.hpp"

namespace goldfib {

// Memoized Fibonacci numbers, Fibonacci factorials and the derived
// combinatorial quantities. Negative indices follow F_{-m} = (-1)^{m+1} F_m,
// which keeps every identity below valid for signed arguments.
//
// All queries are logically const; an internal mutex makes a shared cache
// safe to hit from several threads.
class FibCache {
 public:
  Int fib(long long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    return fib_signed(n);
  }

  // F_n! = F_1 F_2 ... F_n, with F_0! = 1.
  Int fib_factorial(long long n) const {
    if (n < 0) throw std::domain_error("fib_factorial: negative index");
    std::lock_guard<std::mutex> lock(mu_);
    return factorial_locked(n);
  }

  // Fibonomial coefficient, accumulated as a product of prefix ratios
  // F_{n-k+i} / F_i; each prefix is itself a Fibonomial, so every division
  // is exact and intermediates never leave the integers.
  Int fibonomial(long long n, long long k) const {
    if (n < 0 || k < 0 || k > n)
      throw std::domain_error("fibonomial: need 0 <= k <= n");
    std::lock_guard<std::mutex> lock(mu_);
    Int acc(1);
    for (long long i = 1; i <= k; ++i)
      acc = exact_div(acc * fib_signed(n - k + i), fib_signed(i));
    return acc;
  }

  // F^(k)_n = F_{nk} / F_k, an integer for every signed n. A failed division
  // would falsify the divisibility theorem and is reported as fatal.
  Int fib_divisor(long long k, long long n) const {
    if (k < 1) throw std::domain_error("fib_divisor: need k >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    return exact_div(fib_signed(n * k), fib_signed(k));
  }

 private:
  Int fib_signed(long long n) const {
    if (n >= 0) return fib_nonneg(static_cast<unsigned long long>(n));
    unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
    Int v = fib_nonneg(m);
    return (m % 2 == 0) ? Int(-v) : v;
  }

  // Fast doubling on a shared memo map:
  //   F_{2m}   = F_m (2 F_{m+1} - F_m)
  //   F_{2m+1} = F_m^2 + F_{m+1}^2
  Int fib_nonneg(unsigned long long n) const {
    if (n <= 2) return Int(n == 0 ? 0 : 1);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    unsigned long long m = n / 2;
    Int a = fib_nonneg(m);
    Int b = fib_nonneg(m + 1);
    Int r = (n % 2 == 0) ? Int(a * (2 * b - a)) : Int(a * a + b * b);
    memo_.emplace(n, r);
    return r;
  }

  Int factorial_locked(long long n) const {
    if (factorials_.empty()) factorials_.push_back(Int(1));
    while (static_cast<long long>(factorials_.size()) <= n) {
      long long i = static_cast<long long>(factorials_.size());
      factorials_.push_back(factorials_.back() * fib_nonneg(i));
    }
    return factorials_[static_cast<size_t>(n)];
  }

  mutable std::map<unsigned long long, Int> memo_;
  mutable std::vector<Int> factorials_;
  mutable std::mutex mu_;
};

inline FibCache& default_fib_cache() {
  static FibCache cache;
  return cache;
}

inline Int fib(long long n) { return default_fib_cache().fib(n); }
inline Int fib_factorial(long long n) {
  return default_fib_cache().fib_factorial(n);
}
inline Int fibonomial(long long n, long long k) {
  return default_fib_cache().fibonomial(n, k);
}
inline Int fib_divisor(long long k, long long n) {
  return default_fib_cache().fib_divisor(k, n);
}

// The two golden Pascal recursions for Fibonomials. Both express [n k]_F
// through row n-1 with golden-ratio weights; they differ in which factor
// carries the conjugate.
enum class PascalForm { first, second };

// Returns (lhs, rhs) of the chosen recursion as elements of Z[phi]; the
// caller checks equality. Defined for interior entries 1 <= k <= n-1.
inline std::pair<GoldenInt, GoldenInt> golden_pascal_lhs_rhs(long long n,
                                                             long long k,
                                                             PascalForm form) {
  if (k < 1 || k > n - 1)
    throw std::domain_error("golden_pascal_lhs_rhs: need 1 <= k <= n-1");
  GoldenInt lhs{fibonomial(n, k)};
  GoldenInt up{fibonomial(n - 1, k)};
  GoldenInt up_left{fibonomial(n - 1, k - 1)};
  GoldenInt rhs = form == PascalForm::first
                      ? conj(phi_pow(k)) * up + phi_pow(n - k) * up_left
                      : phi_pow(k) * up + conj(phi_pow(n - k)) * up_left;
  return {lhs, rhs};
}

}  // namespace goldfib
