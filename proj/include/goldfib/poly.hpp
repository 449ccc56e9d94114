#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "goldfib/scalar.hpp"

namespace goldfib {

// Dense univariate polynomial over an exact scalar ring. coeff(i) is the
// coefficient of x^i. The representation is canonical: trailing zeros are
// stripped, the zero polynomial stores nothing and reports degree() == -1.
template <ring_scalar R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  // Coefficients in ascending degree: {c0, c1, c2} is c2 x^2 + c1 x + c0.
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly monomial(int degree, R coeff = R(1)) {
    std::vector<R> c(static_cast<size_t>(degree) + 1, R(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly constant(R c) { return Poly({std::move(c)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  R coeff(int i) const {
    if (i < 0 || i > degree()) return R(0);
    return coeffs_[static_cast<size_t>(i)];
  }
  const std::vector<R>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (R& c : coeffs_) c = c * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly x, const Poly& y) { x += y; return x; }
  friend Poly operator-(Poly x, const Poly& y) { x -= y; return x; }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<R> out(x.coeffs_.size() + y.coeffs_.size() - 1, R(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
      for (size_t j = 0; j < y.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + x.coeffs_[i] * y.coeffs_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly x, const R& s) { x *= s; return x; }
  friend Poly operator*(const R& s, Poly x) { x *= s; return x; }
  Poly operator-() const {
    Poly out = *this;
    for (R& c : out.coeffs_) c = -c;
    return out;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  // Horner evaluation in any ring the coefficients embed into (e.g. a
  // rational polynomial at a golden scalar point).
  template <typename S>
  S eval_as(const S& x) const {
    S acc(0);
    for (int i = degree(); i >= 0; --i)
      acc = acc * x + S(coeffs_[static_cast<size_t>(i)]);
    return acc;
  }
  R eval(const R& x) const { return eval_as<R>(x); }

  template <typename S, typename F>
  Poly<S> map(F&& f) const {
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const R& c : coeffs_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

}  // namespace goldfib
