#pragma once

#include <utility>
#include <vector>

#include "goldfib/goldpoly.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/scalar.hpp"
#include "goldfib/sequences.hpp"

namespace goldfib {

// Ordinary binomial coefficient with the combinatorial convention that
// out-of-range k gives 0.
inline Int binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return Int(0);
  Int acc(1);
  for (long long i = 1; i <= k; ++i)
    acc = exact_div(acc * Int(n - k + i), Int(i));
  return acc;
}

// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  explicit IntMatrix(int order) : order_(order), e_(size(), Int(0)) {
    if (order < 1) throw std::domain_error("IntMatrix: order must be >= 1");
  }

  static IntMatrix identity(int order) { return scalar(order, Int(1)); }
  static IntMatrix scalar(int order, const Int& v) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = v;
    return m;
  }

  int order() const { return order_; }
  Int& at(int r, int c) { return e_[static_cast<size_t>(r) * order_ + c]; }
  const Int& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * order_ + c];
  }

  Int trace() const {
    Int t(0);
    for (int i = 0; i < order_; ++i) t += at(i, i);
    return t;
  }

  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    x.require_same_order(y);
    IntMatrix out(x.order_);
    for (size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] + y.e_[i];
    return out;
  }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    x.require_same_order(y);
    IntMatrix out(x.order_);
    for (int i = 0; i < x.order_; ++i)
      for (int k = 0; k < x.order_; ++k) {
        const Int& v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.order_; ++j) out.at(i, j) += v * y.at(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  size_t size() const {
    return static_cast<size_t>(order_) * static_cast<size_t>(order_);
  }
  void require_same_order(const IntMatrix& o) const {
    if (order_ != o.order_)
      throw std::domain_error("IntMatrix: mismatched orders");
  }
  int order_;
  std::vector<Int> e_;
};

// The Carlitz matrix A_{n+1} of a given order: entry (r, s) is the binomial
// coefficient C(r, order-1-s). Rows read as reversed rows of Pascal's
// triangle; A_2 = [[0,1],[1,1]] is the Fibonacci matrix.
inline IntMatrix build_carlitz(int order) {
  IntMatrix m(order);
  for (int r = 0; r < order; ++r)
    for (int s = 0; s < order; ++s)
      m.at(r, s) = binomial(r, order - 1 - s);
  return m;
}

using CharPoly = Poly<Int>;

// Characteristic polynomial det(xI - M), monic of degree order, computed by
// the Faddeev-LeVerrier recurrence
//   M_1 = M,  c_{n-1} = -tr M_1,
//   M_k = M (M_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(M_k) / k.
// Every division is exact over the integers; a remainder is a fatal bug.
inline CharPoly char_poly(const IntMatrix& m) {
  const int n = m.order();
  std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
  c[static_cast<size_t>(n)] = 1;
  IntMatrix mk = m;
  c[static_cast<size_t>(n - 1)] = -mk.trace();
  for (int k = 2; k <= n; ++k) {
    mk = m * (mk + IntMatrix::scalar(n, c[static_cast<size_t>(n - k + 1)]));
    c[static_cast<size_t>(n - k)] = -exact_div(mk.trace(), Int(k));
  }
  return CharPoly(std::move(c));
}

// The central identity: the characteristic polynomial of the Carlitz matrix
// of a given order is the golden binomial (x - 1)^order_F.
inline bool verify_charpoly_theorem(int order) {
  CharPoly q = char_poly(build_carlitz(order));
  Poly<Rat> lhs = q.map<Rat>([](const Int& v) { return Rat(v); });
  return lhs == golden_binomial(order, Rat(1));
}

inline IntMatrix mat_pow(const IntMatrix& m, unsigned long long k) {
  IntMatrix acc = IntMatrix::identity(m.order());
  IntMatrix base = m;
  for (; k; k >>= 1) {
    if (k & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

// Determinant by Bareiss fraction-free elimination: exact over the
// integers, with row pivoting when a leading entry vanishes.
inline Int det_bareiss(IntMatrix m) {
  const int n = m.order();
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Int(0);
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) =
            exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

// Closed form for powers of the order-2 Carlitz (Fibonacci) matrix:
//   A_2^n = [[F_{n-1}, F_n], [F_n, F_{n+1}]].
inline IntMatrix a2_power_closed_form(long long n) {
  if (n < 0) throw std::domain_error("a2_power_closed_form: negative power");
  IntMatrix m(2);
  m.at(0, 0) = fib(n - 1);
  m.at(0, 1) = fib(n);
  m.at(1, 0) = fib(n);
  m.at(1, 1) = fib(n + 1);
  return m;
}

// Closed form for powers of the order-3 Carlitz matrix. Every entry is a
// combination of F^(2)_n = F_{2n}/F_2, F^(2)_{n-1} and (-1)^n divided by 5;
// the divisions must come out exact, anything else is fatal.
inline IntMatrix a3_power_closed_form(long long n) {
  if (n < 0) throw std::domain_error("a3_power_closed_form: negative power");
  const Int g = fib_divisor(2, n);
  const Int h = fib_divisor(2, n - 1);
  const Int s(alternating_sign(n));
  IntMatrix m(3);
  m.at(0, 0) = exact_div(2 * g - 3 * h + 2 * s, Int(5));
  m.at(0, 1) = exact_div(2 * g + 2 * h + 2 * s, Int(5));
  m.at(0, 2) = exact_div(3 * g - 2 * h - 2 * s, Int(5));
  m.at(1, 0) = exact_div(g + h + s, Int(5));
  m.at(1, 1) = exact_div(6 * g - 4 * h + s, Int(5));
  m.at(1, 2) = exact_div(4 * g - h - s, Int(5));
  m.at(2, 0) = exact_div(3 * g - 2 * h - 2 * s, Int(5));
  m.at(2, 1) = exact_div(8 * g - 2 * h - 2 * s, Int(5));
  m.at(2, 2) = exact_div(7 * g - 3 * h + 2 * s, Int(5));
  return m;
}

// Trace of the k-th power of the Carlitz matrix against the Fibonacci
// divisor F^(k)_order it must equal. Returns (computed, expected).
inline std::pair<Int, Int> trace_invariant(int order, long long k) {
  if (k < 1) throw std::domain_error("trace_invariant: need k >= 1");
  Int computed = mat_pow(build_carlitz(order), static_cast<unsigned long long>(k)).trace();
  return {computed, fib_divisor(k, order)};
}

// Determinant of the k-th power against the sign (-1)^{k n(n+1)/2} forced by
// the eigenvalue product, order being n+1. Returns (computed, expected).
inline std::pair<Int, Int> det_invariant(int order, long long k) {
  if (k < 0) throw std::domain_error("det_invariant: need k >= 0");
  Int computed =
      det_bareiss(mat_pow(build_carlitz(order), static_cast<unsigned long long>(k)));
  long long pairs = static_cast<long long>(order - 1) * order / 2;
  Int expected(alternating_sign(k % 2 == 0 ? 0 : pairs));
  return {computed, expected};
}

// Eigenvalues of the order-(n+1) Carlitz matrix, exactly: phi^{n-j} phi'^j
// for j = 0..n, living in Z[phi].
inline std::vector<GoldenInt> eigen_powers(int order) {
  if (order < 1) throw std::domain_error("eigen_powers: order must be >= 1");
  const int n = order - 1;
  std::vector<GoldenInt> out;
  out.reserve(static_cast<size_t>(order));
  for (int j = 0; j <= n; ++j)
    out.push_back(phi_pow(n - j) * conj(phi_pow(j)));
  return out;
}

// Power sums of those eigenvalues: sum_j (phi^k)^{n-j} (phi'^k)^j collapses
// to the integer F^(k)_order inside Z[phi]. Returns (lhs, rhs embedded).
inline std::pair<GoldenInt, GoldenInt> power_sum_identity(int order, long long k) {
  if (order < 1) throw std::domain_error("power_sum_identity: order must be >= 1");
  if (k < 1) throw std::domain_error("power_sum_identity: need k >= 1");
  const int n = order - 1;
  GoldenInt lhs;
  for (int j = 0; j <= n; ++j)
    lhs += phi_pow(k * (n - j)) * conj(phi_pow(k * j));
  return {lhs, GoldenInt(fib_divisor(k, order))};
}

}  // namespace goldfib
