#pragma once

#include <utility>
#include <vector>

#include "goldfib/goldpoly.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/scalar.hpp"

namespace goldfib {

// Dense bivariate polynomial over an exact scalar ring: coeff(i, j) is the
// coefficient of x^i y^j. Canonical form keeps no trailing zeros in any row
// and no trailing empty rows, so structural equality is polynomial equality.
template <ring_scalar R>
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<R>> grid) : grid_(std::move(grid)) {
    trim();
  }

  static BiPoly monomial(int i, int j, R c = R(1)) {
    std::vector<std::vector<R>> g(static_cast<size_t>(i) + 1);
    g.back().assign(static_cast<size_t>(j) + 1, R(0));
    g.back().back() = std::move(c);
    return BiPoly(std::move(g));
  }

  bool is_zero() const { return grid_.empty(); }
  int x_degree() const { return static_cast<int>(grid_.size()) - 1; }
  int y_degree() const {
    int d = -1;
    for (const auto& row : grid_)
      d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  R coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > x_degree()) return R(0);
    const auto& row = grid_[static_cast<size_t>(i)];
    if (j >= static_cast<int>(row.size())) return R(0);
    return row[static_cast<size_t>(j)];
  }

  BiPoly& operator+=(const BiPoly& o) {
    grow_to(o);
    for (size_t i = 0; i < o.grid_.size(); ++i)
      for (size_t j = 0; j < o.grid_[i].size(); ++j)
        grid_[i][j] = grid_[i][j] + o.grid_[i][j];
    trim();
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    grow_to(o);
    for (size_t i = 0; i < o.grid_.size(); ++i)
      for (size_t j = 0; j < o.grid_[i].size(); ++j)
        grid_[i][j] = grid_[i][j] - o.grid_[i][j];
    trim();
    return *this;
  }

  friend BiPoly operator+(BiPoly x, const BiPoly& y) { x += y; return x; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { x -= y; return x; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    if (x.is_zero() || y.is_zero()) return BiPoly();
    std::vector<std::vector<R>> out(
        static_cast<size_t>(x.x_degree() + y.x_degree()) + 1,
        std::vector<R>(static_cast<size_t>(x.y_degree() + y.y_degree()) + 1,
                       R(0)));
    for (int xi = 0; xi <= x.x_degree(); ++xi)
      for (int xj = 0; xj <= x.y_degree(); ++xj) {
        R c = x.coeff(xi, xj);
        if (c == R(0)) continue;
        for (int yi = 0; yi <= y.x_degree(); ++yi)
          for (int yj = 0; yj <= y.y_degree(); ++yj)
            out[static_cast<size_t>(xi + yi)][static_cast<size_t>(xj + yj)] =
                out[static_cast<size_t>(xi + yi)][static_cast<size_t>(xj + yj)] +
                c * y.coeff(yi, yj);
      }
    return BiPoly(std::move(out));
  }
  friend BiPoly operator*(BiPoly x, const R& s) {
    for (auto& row : x.grid_)
      for (R& c : row) c = c * s;
    x.trim();
    return x;
  }
  BiPoly operator-() const {
    BiPoly out = *this;
    for (auto& row : out.grid_)
      for (R& c : row) c = -c;
    return out;
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  template <typename S, typename F>
  BiPoly<S> map(F&& f) const {
    std::vector<std::vector<S>> out(grid_.size());
    for (size_t i = 0; i < grid_.size(); ++i)
      for (const R& c : grid_[i]) out[i].push_back(f(c));
    return BiPoly<S>(std::move(out));
  }

 private:
  void grow_to(const BiPoly& o) {
    if (grid_.size() < o.grid_.size()) grid_.resize(o.grid_.size());
    for (size_t i = 0; i < o.grid_.size(); ++i)
      if (grid_[i].size() < o.grid_[i].size())
        grid_[i].resize(o.grid_[i].size(), R(0));
  }
  void trim() {
    for (auto& row : grid_)
      while (!row.empty() && row.back() == R(0)) row.pop_back();
    while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
  }
  std::vector<std::vector<R>> grid_;
};

// Pair (re, im) standing for re + i*im; i is structural, never a number.
template <ring_scalar R>
struct ComplexBiPoly {
  BiPoly<R> re, im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexBiPoly operator+(const ComplexBiPoly& x, const ComplexBiPoly& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexBiPoly operator-(const ComplexBiPoly& x, const ComplexBiPoly& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexBiPoly operator*(const ComplexBiPoly& x, const ComplexBiPoly& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const ComplexBiPoly&, const ComplexBiPoly&) = default;
};

template <typename T>
BiPoly<T> collapse_to_base(const BiPoly<GoldenScalar<T>>& p) {
  return p.template map<T>([](const GoldenScalar<T>& c) {
    if (!(c.phi_part() == T(0)))
      throw invariant_error("collapse_to_base: residual phi component");
    return c.unit_part();
  });
}

template <typename T>
ComplexBiPoly<T> collapse_to_base(const ComplexBiPoly<GoldenScalar<T>>& p) {
  return {collapse_to_base(p.re), collapse_to_base(p.im)};
}

// Golden partial derivative in x: x^n y^m -> F_n x^{n-1} y^m.
template <ring_scalar R>
BiPoly<R> dF_x(const BiPoly<R>& p) {
  BiPoly<R> out;
  for (int i = 1; i <= p.x_degree(); ++i)
    for (int j = 0; j <= p.y_degree(); ++j) {
      R c = p.coeff(i, j);
      if (c == R(0)) continue;
      out += BiPoly<R>::monomial(i - 1, j, c * embed_int<R>(fib(i)));
    }
  return out;
}

// Golden partial derivative in y: x^n y^m -> F_m x^n y^{m-1}.
template <ring_scalar R>
BiPoly<R> dF_y(const BiPoly<R>& p) {
  BiPoly<R> out;
  for (int i = 0; i <= p.x_degree(); ++i)
    for (int j = 1; j <= p.y_degree(); ++j) {
      R c = p.coeff(i, j);
      if (c == R(0)) continue;
      out += BiPoly<R>::monomial(i, j - 1, c * embed_int<R>(fib(j)));
    }
  return out;
}

// Sign-twisted golden partial in y: y^m -> (-1)^{m-1} F_m y^{m-1}, the
// parity taken after the degree drop. This is the y-operator under which
// the complex golden binomials are analytic.
template <ring_scalar R>
BiPoly<R> dNegF_y(const BiPoly<R>& p) {
  BiPoly<R> out;
  for (int i = 0; i <= p.x_degree(); ++i)
    for (int j = 1; j <= p.y_degree(); ++j) {
      R c = p.coeff(i, j);
      if (c == R(0)) continue;
      Int w = (j % 2 == 0) ? Int(-fib(j)) : fib(j);
      out += BiPoly<R>::monomial(i, j - 1, c * embed_int<R>(w));
    }
  return out;
}

// Complex golden binomial (x + iy)^n_F split into real and imaginary parts:
//   sum_k [n k]_F (-1)^{k(k-1)/2} x^{n-k} (iy)^k
// with i^k folded into the two components by k mod 4.
inline ComplexBiPoly<Rat> complex_golden_binomial(int n) {
  if (n < 0) throw std::domain_error("complex_golden_binomial: negative degree");
  ComplexBiPoly<Rat> out;
  for (int k = 0; k <= n; ++k) {
    Rat c = Rat(fibonomial(n, k)) * golden_sign(k);
    switch (k % 4) {
      case 0: out.re += BiPoly<Rat>::monomial(n - k, k, c); break;
      case 1: out.im += BiPoly<Rat>::monomial(n - k, k, c); break;
      case 2: out.re += BiPoly<Rat>::monomial(n - k, k, -c); break;
      default: out.im += BiPoly<Rat>::monomial(n - k, k, -c); break;
    }
  }
  return out;
}

// The same binomial as a product of conjugate-paired linear factors
//   prod_{j=0}^{n-1} (x + i (-1)^j phi^{n-1-2j} y)
// over Q(phi); phi is a unit, so the negative powers stay exact.
inline ComplexBiPoly<GoldenRational> complex_golden_binomial_product_form(int n) {
  if (n < 0) throw std::domain_error("complex_golden_binomial: negative degree");
  ComplexBiPoly<GoldenRational> acc{
      BiPoly<GoldenRational>::monomial(0, 0, GoldenRational(Rat(1))),
      BiPoly<GoldenRational>()};
  for (int j = 0; j < n; ++j) {
    GoldenRational w = GoldenRational(phi_pow(n - 1 - 2 * j));
    if (j % 2 != 0) w = -w;
    ComplexBiPoly<GoldenRational> factor{
        BiPoly<GoldenRational>::monomial(1, 0, GoldenRational(Rat(1))),
        BiPoly<GoldenRational>::monomial(0, 1, w)};
    acc = acc * factor;
  }
  return acc;
}

// Real and imaginary parts (u, v) of the golden-analytic extension of f:
//   sum_n (-1)^{n(n-1)/2} (iy)^n (D_F^n f)(x) / F_n!,
// a finite sum since D_F is nilpotent on polynomials. Even n feeds u
// (golden cosine direction), odd n feeds v (golden sine direction).
inline std::pair<BiPoly<Rat>, BiPoly<Rat>> cos_sin_parts(const Poly<Rat>& f) {
  BiPoly<Rat> u, v;
  std::vector<Rat> weights =
      golden_exponential_coefficients(f.degree() < 0 ? 0 : f.degree());
  Poly<Rat> term = f;  // D_F^n f
  for (int n = 0; !term.is_zero(); ++n) {
    int sign = (n % 4 < 2) ? 1 : -1;  // i^n = +/-1 for even n, +/-i for odd
    BiPoly<Rat>& target = (n % 2 == 0) ? u : v;
    for (int i = 0; i <= term.degree(); ++i) {
      Rat c = term.coeff(i);
      if (c == 0) continue;
      target += BiPoly<Rat>::monomial(i, n,
                                      c * weights[static_cast<size_t>(n)] * sign);
    }
    term = golden_derivative(term);
  }
  return {std::move(u), std::move(v)};
}

// The golden dbar operator (D_F^x + i D_{-F}^y) applied to re + i*im.
inline ComplexBiPoly<Rat> dbar(const ComplexBiPoly<Rat>& f) {
  return {dF_x(f.re) - dNegF_y(f.im), dF_x(f.im) + dNegF_y(f.re)};
}

// Golden analyticity of the n-th complex golden binomial: dbar kills it.
inline bool check_dbar(int n) {
  return dbar(complex_golden_binomial(n)).is_zero();
}

// Golden Cauchy-Riemann equations for the extension of f:
//   D_F^x u = D_{-F}^y v  and  D_{-F}^y u = -D_F^x v.
inline bool check_cauchy_riemann(const Poly<Rat>& f) {
  auto [u, v] = cos_sin_parts(f);
  return dF_x(u) == dNegF_y(v) && dNegF_y(u) == -(dF_x(v));
}

// Same content phrased through dbar: the extension u + iv of f is killed by
// the dbar operator.
inline bool check_dbar_poly(const Poly<Rat>& f) {
  auto [u, v] = cos_sin_parts(f);
  return dbar(ComplexBiPoly<Rat>{std::move(u), std::move(v)}).is_zero();
}

// Golden Laplace equation: (D_F^x)^2 + (D_{-F}^y)^2 annihilates both the
// real and the imaginary part of the extension of f.
inline bool check_laplace(const Poly<Rat>& f) {
  auto [u, v] = cos_sin_parts(f);
  auto harmonic = [](const BiPoly<Rat>& w) {
    return (dF_x(dF_x(w)) + dNegF_y(dNegF_y(w))).is_zero();
  };
  return harmonic(u) && harmonic(v);
}

}  // namespace goldfib
