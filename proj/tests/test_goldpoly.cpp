#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "goldfib/goldpoly.hpp"

using goldfib::collapse_to_base;
using goldfib::expand_quadratic_factor_form;
using goldfib::fib_factorial;
using goldfib::golden_binomial;
using goldfib::golden_binomial_product_form;
using goldfib::golden_derivative;
using goldfib::golden_derivative_definitional;
using goldfib::golden_exponential_coefficients;
using goldfib::golden_poly_P;
using goldfib::golden_sign;
using goldfib::golden_translate;
using goldfib::GoldenRational;
using goldfib::Int;
using goldfib::Poly;
using goldfib::quadratic_factor_form;
using goldfib::Rat;

namespace {

Poly<Rat> rand_int_poly(std::mt19937_64& rng, int max_deg) {
  size_t deg = rng() % static_cast<unsigned long long>(max_deg + 1);
  std::vector<Rat> c;
  for (size_t i = 0; i <= deg; ++i)
    c.push_back(Rat(static_cast<long long>(rng() % 19) - 9));
  return Poly<Rat>(std::move(c));
}

const std::vector<Rat> kOffsets = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};

}  // namespace

TEST_CASE("golden binomial pins", "[goldpoly]") {
  CHECK(golden_binomial(0, Rat(1)) == Poly<Rat>{Rat(1)});
  CHECK(golden_binomial(1, Rat(1)) == Poly<Rat>{Rat(-1), Rat(1)});
  CHECK(golden_binomial(2, Rat(1)) == Poly<Rat>{Rat(-1), Rat(-1), Rat(1)});
  CHECK(golden_binomial(3, Rat(1)) ==
        Poly<Rat>{Rat(1), Rat(-2), Rat(-2), Rat(1)});
  CHECK(golden_binomial(4, Rat(1)) ==
        Poly<Rat>{Rat(1), Rat(3), Rat(-6), Rat(-3), Rat(1)});
  CHECK(golden_binomial(2, Rat(2)) == Poly<Rat>{Rat(-4), Rat(-2), Rat(1)});
  CHECK_THROWS_AS(golden_binomial(-1, Rat(1)), std::domain_error);
}

TEST_CASE("expansion equals the collapsed linear-factor product",
          "[goldpoly]") {
  for (int n = 0; n <= 30; ++n)
    for (const Rat& a : kOffsets)
      CHECK(golden_binomial(n, a) ==
            collapse_to_base(golden_binomial_product_form(n, a)));
}

TEST_CASE("product form really is a product of the displayed roots",
          "[goldpoly]") {
  // degree-1 factors evaluated at their own root vanish before collapsing
  Poly<GoldenRational> p = golden_binomial_product_form(5, Rat(1));
  for (int j = 0; j < 5; ++j) {
    GoldenRational root{goldfib::phi_pow(j) * conj(goldfib::phi_pow(4 - j))};
    CHECK(p.eval_as<GoldenRational>(root).is_zero());
  }
}

TEST_CASE("golden P polynomials scale by fib factorials", "[goldpoly]") {
  CHECK(golden_poly_P(0, Rat(1)) == Poly<Rat>{Rat(1)});
  CHECK(golden_poly_P(3, Rat(1)) ==
        Poly<Rat>{Rat(1, 2), Rat(-1), Rat(-1), Rat(1, 2)});
  for (int n = 0; n <= 25; ++n)
    for (const Rat& a : kOffsets)
      CHECK(golden_poly_P(n, a) * Rat(fib_factorial(n)) ==
            golden_binomial(n, a));
}

TEST_CASE("golden derivative acts as x^n -> F_n x^{n-1}", "[goldpoly]") {
  CHECK(golden_derivative(Poly<Rat>::monomial(3)) ==
        Poly<Rat>{Rat(0), Rat(0), Rat(2)});
  CHECK(golden_derivative(Poly<Rat>::monomial(1)) == Poly<Rat>{Rat(1)});
  CHECK(golden_derivative(Poly<Rat>{Rat(7)}).is_zero());
  CHECK(golden_derivative(Poly<Rat>()).is_zero());
}

TEST_CASE("closed-form derivative equals the definitional quotient",
          "[goldpoly]") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Poly<Rat> p = rand_int_poly(rng, 20);
    CHECK(golden_derivative(p) == golden_derivative_definitional(p));
  }
}

TEST_CASE("derivative sends P_n to P_{n-1}", "[goldpoly]") {
  for (int n = 1; n <= 30; ++n)
    for (const Rat& a : kOffsets)
      CHECK(golden_derivative(golden_poly_P(n, a)) == golden_poly_P(n - 1, a));
}

TEST_CASE("golden exponential coefficients", "[goldpoly]") {
  std::vector<Rat> c = golden_exponential_coefficients(30);
  REQUIRE(c.size() == 31);
  for (int n = 0; n <= 30; ++n)
    CHECK(c[static_cast<size_t>(n)] ==
          Rat(golden_sign(n)) / Rat(fib_factorial(n)));
  CHECK(c[0] == 1);
  CHECK(c[2] == -1);
  CHECK(c[5] == Rat(1, 30));
}

TEST_CASE("golden translation of monomials gives golden binomials",
          "[goldpoly]") {
  for (int n = 0; n <= 30; ++n)
    for (const Rat& a : kOffsets)
      CHECK(golden_translate(Poly<Rat>::monomial(n), a) ==
            golden_binomial(n, a));
}

TEST_CASE("translation by zero is the identity", "[goldpoly]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    Poly<Rat> p = rand_int_poly(rng, 15);
    CHECK(golden_translate(p, Rat(0)) == p);
  }
}

TEST_CASE("quadratic factor form reproduces the displayed products",
          "[goldpoly]") {
  // P_6 = (x^2 - x - 1)(x^2 + 4x - 1)(x^2 - 11x - 1) / 240 at a = 1
  auto f6 = quadratic_factor_form(6, Rat(1));
  REQUIRE(f6.factors.size() == 3);
  CHECK(f6.factorial_scale == 240);
  CHECK(f6.factors[0] == Poly<Rat>{Rat(-1), Rat(-1), Rat(1)});
  CHECK(f6.factors[1] == Poly<Rat>{Rat(-1), Rat(4), Rat(1)});
  CHECK(f6.factors[2] == Poly<Rat>{Rat(-1), Rat(-11), Rat(1)});

  // P_4 = (x^2 + x - 1)(x^2 - 4x - 1) / 6 at a = 1
  auto f4 = quadratic_factor_form(4, Rat(1));
  REQUIRE(f4.factors.size() == 2);
  CHECK(f4.factorial_scale == 6);
  CHECK(f4.factors[0] == Poly<Rat>{Rat(-1), Rat(1), Rat(1)});
  CHECK(f4.factors[1] == Poly<Rat>{Rat(-1), Rat(-4), Rat(1)});

  // P_1 = x - 1 at a = 1
  auto f1 = quadratic_factor_form(1, Rat(1));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factorial_scale == 1);
  CHECK(f1.factors[0] == Poly<Rat>{Rat(-1), Rat(1)});

  // P_7 leads with (x + a) and carries +a^2 constant terms
  auto f7 = quadratic_factor_form(7, Rat(1));
  REQUIRE(f7.factors.size() == 4);
  CHECK(f7.factorial_scale == 3120);
  CHECK(f7.factors[0] == Poly<Rat>{Rat(1), Rat(1)});
  CHECK(f7.factors[1] == Poly<Rat>{Rat(1), Rat(-3), Rat(1)});
  CHECK(f7.factors[2] == Poly<Rat>{Rat(1), Rat(7), Rat(1)});
  CHECK(f7.factors[3] == Poly<Rat>{Rat(1), Rat(-18), Rat(1)});
}

TEST_CASE("quadratic factor form multiplies back to P_m", "[goldpoly]") {
  for (int m = 0; m <= 20; ++m)
    for (const Rat& a : kOffsets)
      CHECK(expand_quadratic_factor_form(quadratic_factor_form(m, a)) ==
            golden_poly_P(m, a));
}

TEST_CASE("collapse rejects residual phi components", "[goldpoly]") {
  Poly<GoldenRational> p{GoldenRational::phi()};
  CHECK_THROWS_AS(collapse_to_base(p), goldfib::invariant_error);
}
