#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goldfib {

// Every quantity in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a property the library guarantees internally fails to hold
// (a division that must be exact leaves a remainder, a collapse meets a
// nonzero phi component, ...). Seeing one of these means a bug, not bad input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Scalars usable as polynomial or matrix coefficients: a commutative ring
// with exact equality. Construction from int supplies 0 and 1.
template <typename R>
concept ring_scalar =
    std::equality_comparable<R> && std::constructible_from<R, int> &&
    requires(const R a, const R b) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
    };

// Quotient of an exactly divisible pair.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw invariant_error("exact_div: division by zero");
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0)
    throw invariant_error("exact_div: " + a.str() + " is not divisible by " +
                          b.str());
  return q;
}

// (-1)^e for a signed exponent.
inline int alternating_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// (-1)^{k(k-1)/2}, the sign attached to the degree-k coefficient of golden
// binomials and of the golden exponential. Period 4 in k: +, +, -, -.
inline int golden_sign(long long k) {
  if (k < 0) throw std::domain_error("golden_sign: negative index");
  return (k % 4 <= 1) ? 1 : -1;
}

// Embeds an Int into a scalar ring. Extended for golden scalars alongside
// their definition.
template <ring_scalar R>
struct int_embedding {
  static R apply(const Int& v) { return R(v); }
};

template <ring_scalar R>
R embed_int(const Int& v) {
  return int_embedding<R>::apply(v);
}

// Parses "p" or "p/q" with an optional leading minus into an exact rational.
// Rejects anything else (whitespace, decimals, empty denominators).
inline Rat parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::domain_error("not a rational: '" + std::string(text) + "'");
  };
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits(num) || !digits(den)) throw bad();
  Int p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw bad();
  if (neg) p = -p;
  return Rat(p, q);
}

}  // namespace goldfib
