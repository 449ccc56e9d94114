#pragma once

#include <utility>

#include "goldfib/scalar.hpp"

namespace goldfib {

// Element a + b*phi of Z[phi] (T = Int) or Q(phi) (T = Rat), phi being the
// golden ratio. Products reduce through phi^2 = phi + 1, so no irrational
// value is ever materialized. The conjugation phi -> phi' = 1 - phi is an
// involutive ring homomorphism, and x * conj(x) lands in the base ring,
// giving the norm a^2 + ab - b^2.
template <typename T>
class GoldenScalar {
 public:
  GoldenScalar() : a_(0), b_(0) {}
  GoldenScalar(int v) : a_(v), b_(0) {}
  GoldenScalar(T unit) : a_(std::move(unit)), b_(0) {}
  GoldenScalar(T unit, T phi_coeff)
      : a_(std::move(unit)), b_(std::move(phi_coeff)) {}

  template <typename U>
    requires(!std::same_as<U, T> && std::constructible_from<T, U>)
  explicit GoldenScalar(const GoldenScalar<U>& other)
      : a_(T(other.unit_part())), b_(T(other.phi_part())) {}

  static GoldenScalar phi() { return GoldenScalar(T(0), T(1)); }
  static GoldenScalar phi_conj() { return GoldenScalar(T(1), T(-1)); }

  const T& unit_part() const { return a_; }
  const T& phi_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  GoldenScalar& operator+=(const GoldenScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  GoldenScalar& operator-=(const GoldenScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  GoldenScalar& operator*=(const GoldenScalar& o) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    T bd = b_ * o.b_;
    T ad_bc = a_ * o.b_ + b_ * o.a_;
    a_ = a_ * o.a_ + bd;
    b_ = ad_bc + bd;
    return *this;
  }

  friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) {
    x += y;
    return x;
  }
  friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) {
    x -= y;
    return x;
  }
  friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar& y) {
    x *= y;
    return x;
  }
  GoldenScalar operator-() const { return GoldenScalar(-a_, -b_); }

  friend bool operator==(const GoldenScalar&, const GoldenScalar&) = default;

  friend GoldenScalar conj(const GoldenScalar& x) {
    return GoldenScalar(x.a_ + x.b_, -x.b_);
  }
  friend T norm(const GoldenScalar& x) {
    return x.a_ * x.a_ + x.a_ * x.b_ - x.b_ * x.b_;
  }

  GoldenScalar pow(unsigned long long e) const {
    GoldenScalar acc(T(1));
    GoldenScalar base = *this;
    for (; e; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

 private:
  T a_, b_;
};

using GoldenInt = GoldenScalar<Int>;
using GoldenRational = GoldenScalar<Rat>;

template <typename T>
struct int_embedding<GoldenScalar<T>> {
  static GoldenScalar<T> apply(const Int& v) { return GoldenScalar<T>(T(v)); }
};

// phi^n for any signed n, computed purely by ring arithmetic (phi is a unit:
// phi^{-1} = phi - 1). That the result always equals F_{n-1} + F_n * phi is
// a theorem checked elsewhere, not an ingredient of this function.
inline GoldenInt phi_pow(long long n) {
  GoldenInt base =
      n >= 0 ? GoldenInt::phi() : GoldenInt(Int(-1), Int(1));  // phi or 1/phi
  unsigned long long e =
      n >= 0 ? static_cast<unsigned long long>(n)
             : static_cast<unsigned long long>(-(n + 1)) + 1ULL;
  return base.pow(e);
}

inline GoldenRational inverse(const GoldenRational& x) {
  Rat n = norm(x);
  if (n == 0) throw std::domain_error("golden scalar division by zero");
  GoldenRational c = conj(x);
  return GoldenRational(c.unit_part() / n, c.phi_part() / n);
}

inline GoldenRational operator/(const GoldenRational& x,
                                const GoldenRational& y) {
  return x * inverse(y);
}

}  // namespace goldfib
