#pragma once

#include <vector>

#include "goldfib/golden_ring.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/scalar.hpp"
#include "goldfib/sequences.hpp"

namespace goldfib {

// Strips golden-scalar coefficients that are known to be plain base-ring
// values down to the base ring. A nonzero phi component means some identity
// failed upstream, so it is treated as fatal.
template <typename T>
Poly<T> collapse_to_base(const Poly<GoldenScalar<T>>& p) {
  std::vector<T> out;
  out.reserve(static_cast<size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) {
    const GoldenScalar<T>& c = p.coeff(i);
    if (!(c.phi_part() == T(0)))
      throw invariant_error("collapse_to_base: residual phi component");
    out.push_back(c.unit_part());
  }
  return Poly<T>(std::move(out));
}

// Golden binomial (x - a)^n_F expanded in powers of x:
//   sum_k [n k]_F (-1)^{k(k-1)/2} (-a)^k x^{n-k}.
inline Poly<Rat> golden_binomial(int n, const Rat& a) {
  if (n < 0) throw std::domain_error("golden_binomial: negative degree");
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
  Rat neg_a_pow(1);  // (-a)^k
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<size_t>(n - k)] =
        Rat(fibonomial(n, k)) * golden_sign(k) * neg_a_pow;
    neg_a_pow *= -a;
  }
  return Poly<Rat>(std::move(coeffs));
}

// The same golden binomial as an explicit product of linear factors
//   prod_{j=0}^{n-1} (x - phi^j phi'^{n-1-j} a)
// carried out in Q(phi). Collapsing the result and comparing with the
// expansion is the built-in cross-check of the two routes.
inline Poly<GoldenRational> golden_binomial_product_form(int n, const Rat& a) {
  if (n < 0) throw std::domain_error("golden_binomial: negative degree");
  Poly<GoldenRational> acc{GoldenRational(Rat(1))};
  for (int j = 0; j < n; ++j) {
    GoldenRational root =
        GoldenRational(phi_pow(j) * conj(phi_pow(n - 1 - j))) *
        GoldenRational(a);
    acc *= Poly<GoldenRational>{-root, GoldenRational(Rat(1))};
  }
  return acc;
}

// P_n(x) = (x - a)^n_F / F_n!, the golden analogue of x^n / n!.
inline Poly<Rat> golden_poly_P(int n, const Rat& a) {
  Rat scale = Rat(1) / Rat(fib_factorial(n));
  return golden_binomial(n, a) * scale;
}

// Golden derivative, the linear operator with x^n -> F_n x^{n-1}.
template <ring_scalar R>
Poly<R> golden_derivative(const Poly<R>& p) {
  if (p.degree() < 1) return Poly<R>();
  std::vector<R> out;
  out.reserve(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    out.push_back(p.coeff(i) * embed_int<R>(fib(i)));
  return Poly<R>(std::move(out));
}

// Golden derivative straight from its definition,
//   D_F p = (p(phi x) - p(phi' x)) / ((phi - phi') x),
// evaluated symbolically in Q(phi) and collapsed. Kept deliberately free of
// Fibonacci numbers so it can vouch for the closed form above.
inline Poly<Rat> golden_derivative_definitional(const Poly<Rat>& p) {
  if (p.degree() < 1) return Poly<Rat>();
  const GoldenRational phi = GoldenRational::phi();
  const GoldenRational phic = GoldenRational::phi_conj();
  const GoldenRational diff_inv = inverse(phi - phic);
  std::vector<GoldenRational> out;
  out.reserve(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    GoldenRational spread =
        phi.pow(static_cast<unsigned long long>(i)) -
        phic.pow(static_cast<unsigned long long>(i));
    out.push_back(GoldenRational(p.coeff(i)) * spread * diff_inv);
  }
  return collapse_to_base(Poly<GoldenRational>(std::move(out)));
}

// Coefficients of the truncated golden exponential E_F^x:
//   c_n = (-1)^{n(n-1)/2} / F_n!   for n = 0..max_degree.
inline std::vector<Rat> golden_exponential_coefficients(int max_degree) {
  if (max_degree < 0)
    throw std::domain_error("golden_exponential_coefficients: negative degree");
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n)
    out.push_back(Rat(golden_sign(n)) / Rat(fib_factorial(n)));
  return out;
}

// Golden translation E_F^{-aD_F} p: the golden-calculus substitute for
// p(x - a). On x^n it reproduces the golden binomial; the series is finite
// because D_F lowers degree.
inline Poly<Rat> golden_translate(const Poly<Rat>& p, const Rat& a) {
  std::vector<Rat> weights =
      golden_exponential_coefficients(p.degree() < 0 ? 0 : p.degree());
  Poly<Rat> result;
  Poly<Rat> term = p;  // D_F^k p
  Rat neg_a_pow(1);    // (-a)^k
  for (size_t k = 0; !term.is_zero(); ++k) {
    result += term * (weights[k] * neg_a_pow);
    term = golden_derivative(term);
    neg_a_pow *= -a;
  }
  return result;
}

// P_m written as a product of integer-patterned factors: for even m = 2n
//   F_m! P_m = prod_{k=1}^{n} (x^2 - (-1)^{n+k} (F_{2k-1} + 2 F_{2k-2}) a x - a^2)
// and for odd m = 2n+1 an extra leading (x - (-1)^n a) with the quadratics
//   x^2 - (-1)^{n+k} (F_{2k} + 2 F_{2k-1}) a x + a^2.
// Note the constant terms differ in sign between the two parities.
struct QuadraticFactorForm {
  std::vector<Poly<Rat>> factors;
  Int factorial_scale;  // F_m!; the product of factors equals F_m! * P_m
};

inline QuadraticFactorForm quadratic_factor_form(int m, const Rat& a) {
  if (m < 0) throw std::domain_error("quadratic_factor_form: negative degree");
  QuadraticFactorForm form;
  form.factorial_scale = fib_factorial(m);
  const Rat a_sq = a * a;
  if (m % 2 == 0) {
    int n = m / 2;
    for (int k = 1; k <= n; ++k) {
      Rat mid = Rat(alternating_sign(n + k)) * Rat(fib(2 * k - 1) + 2 * fib(2 * k - 2)) * a;
      form.factors.push_back(Poly<Rat>{-a_sq, -mid, Rat(1)});
    }
  } else {
    int n = (m - 1) / 2;
    form.factors.push_back(Poly<Rat>{Rat(-alternating_sign(n)) * a, Rat(1)});
    for (int k = 1; k <= n; ++k) {
      Rat mid = Rat(alternating_sign(n + k)) * Rat(fib(2 * k) + 2 * fib(2 * k - 1)) * a;
      form.factors.push_back(Poly<Rat>{a_sq, -mid, Rat(1)});
    }
  }
  return form;
}

inline Poly<Rat> expand_quadratic_factor_form(const QuadraticFactorForm& form) {
  Poly<Rat> acc{Rat(1)};
  for (const Poly<Rat>& f : form.factors) acc *= f;
  return acc * (Rat(1) / Rat(form.factorial_scale));
}

}  // namespace goldfib
