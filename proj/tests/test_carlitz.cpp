#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "goldfib/carlitz.hpp"
#include "oracles.hpp"

using goldfib::a2_power_closed_form;
using goldfib::a3_power_closed_form;
using goldfib::binomial;
using goldfib::build_carlitz;
using goldfib::char_poly;
using goldfib::CharPoly;
using goldfib::det_bareiss;
using goldfib::det_invariant;
using goldfib::eigen_powers;
using goldfib::fib;
using goldfib::GoldenInt;
using goldfib::Int;
using goldfib::IntMatrix;
using goldfib::mat_pow;
using goldfib::phi_pow;
using goldfib::Poly;
using goldfib::power_sum_identity;
using goldfib::trace_invariant;

TEST_CASE("binomials with the zero convention", "[carlitz]") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(0, 1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("Carlitz matrices of small order", "[carlitz]") {
  IntMatrix a1 = build_carlitz(1);
  CHECK(a1.at(0, 0) == 1);

  IntMatrix a2 = build_carlitz(2);
  CHECK(a2.at(0, 0) == 0);
  CHECK(a2.at(0, 1) == 1);
  CHECK(a2.at(1, 0) == 1);
  CHECK(a2.at(1, 1) == 1);

  IntMatrix a3 = build_carlitz(3);
  const long long expect3[3][3] = {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(a3.at(r, c) == expect3[r][c]);

  // bottom row of the order-5 matrix is a full binomial row
  IntMatrix a5 = build_carlitz(5);
  const long long bottom[5] = {1, 4, 6, 4, 1};
  for (int c = 0; c < 5; ++c) CHECK(a5.at(4, c) == bottom[c]);

  CHECK_THROWS_AS(build_carlitz(0), std::domain_error);
}

TEST_CASE("characteristic polynomial matches cofactor expansion",
          "[carlitz]") {
  for (int order = 1; order <= 6; ++order) {
    IntMatrix a = build_carlitz(order);
    CHECK(char_poly(a) == oracles::cofactor_char_poly(a));
  }
  // and on a non-Carlitz matrix with a zero diagonal
  IntMatrix m(3);
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 2) = -1;
  m.at(2, 0) = 5;
  CHECK(char_poly(m) == oracles::cofactor_char_poly(m));
}

TEST_CASE("pinned characteristic polynomials", "[carlitz]") {
  CHECK(char_poly(build_carlitz(1)) == CharPoly{Int(-1), Int(1)});
  CHECK(char_poly(build_carlitz(2)) == CharPoly{Int(-1), Int(-1), Int(1)});
  CHECK(char_poly(build_carlitz(3)) ==
        CharPoly{Int(1), Int(-2), Int(-2), Int(1)});
  CHECK(char_poly(build_carlitz(4)) ==
        CharPoly{Int(1), Int(3), Int(-6), Int(-3), Int(1)});
}

TEST_CASE("characteristic polynomial is the golden binomial at offset 1",
          "[carlitz]") {
  for (int order = 1; order <= 14; ++order)
    CHECK(goldfib::verify_charpoly_theorem(order));
}

TEST_CASE("matrix powers match plain iteration", "[carlitz]") {
  for (int order = 1; order <= 5; ++order) {
    IntMatrix a = build_carlitz(order);
    for (long long k = 0; k <= 9; ++k)
      CHECK(mat_pow(a, static_cast<unsigned long long>(k)) ==
            oracles::slow_mat_pow(a, k));
  }
}

TEST_CASE("pinned powers of the Fibonacci matrix", "[carlitz]") {
  IntMatrix a2_5 = mat_pow(build_carlitz(2), 5);
  CHECK(a2_5.at(0, 0) == 3);
  CHECK(a2_5.at(0, 1) == 5);
  CHECK(a2_5.at(1, 0) == 5);
  CHECK(a2_5.at(1, 1) == 8);
}

TEST_CASE("closed form for powers of the order-2 matrix", "[carlitz]") {
  IntMatrix a = build_carlitz(2);
  for (long long n = 0; n <= 60; ++n)
    CHECK(a2_power_closed_form(n) ==
          mat_pow(a, static_cast<unsigned long long>(n)));
  CHECK(a2_power_closed_form(0) == IntMatrix::identity(2));
  CHECK_THROWS_AS(a2_power_closed_form(-1), std::domain_error);
}

TEST_CASE("closed form for powers of the order-3 matrix", "[carlitz]") {
  IntMatrix a = build_carlitz(3);
  for (long long n = 0; n <= 40; ++n)
    CHECK(a3_power_closed_form(n) ==
          mat_pow(a, static_cast<unsigned long long>(n)));
  CHECK(a3_power_closed_form(0) == IntMatrix::identity(3));
  CHECK(a3_power_closed_form(1) == a);

  IntMatrix sq = a3_power_closed_form(2);
  const long long expect[3][3] = {{1, 2, 1}, {1, 3, 2}, {1, 4, 4}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(sq.at(r, c) == expect[r][c]);
  CHECK(sq.at(0, 0) == 1);  // (2*3 - 3*1 + 2) / 5
}

TEST_CASE("trace of powers realizes Fibonacci divisors", "[carlitz]") {
  auto [t31, e31] = trace_invariant(3, 1);
  CHECK(t31 == 2);
  CHECK(e31 == 2);
  auto [t32, e32] = trace_invariant(3, 2);
  CHECK(t32 == 8);
  CHECK(e32 == 8);
  for (int order = 1; order <= 10; ++order)
    for (long long k = 1; k <= 8; ++k) {
      auto [got, expect] = trace_invariant(order, k);
      CHECK(got == expect);
    }
  for (int order = 1; order <= 30; ++order)
    CHECK(build_carlitz(order).trace() == fib(order));
  CHECK_THROWS_AS(trace_invariant(3, 0), std::domain_error);
}

TEST_CASE("determinant of powers is a pure sign", "[carlitz]") {
  auto [d31, e31] = det_invariant(3, 1);
  CHECK(d31 == -1);
  CHECK(e31 == -1);
  auto [d41, e41] = det_invariant(4, 1);
  CHECK(d41 == 1);
  CHECK(e41 == 1);
  auto [d30, e30] = det_invariant(3, 0);
  CHECK(d30 == 1);
  CHECK(e30 == 1);
  for (int order = 1; order <= 10; ++order)
    for (long long k = 0; k <= 8; ++k) {
      auto [got, expect] = det_invariant(order, k);
      CHECK(got == expect);
    }
}

TEST_CASE("Bareiss determinant handles pivoting and singularity",
          "[carlitz]") {
  IntMatrix m(2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;          // antidiagonal, needs a row swap
  CHECK(det_bareiss(m) == -1);

  IntMatrix s(3);
  for (int c = 0; c < 3; ++c) {
    s.at(0, c) = c + 1;
    s.at(1, c) = 2 * (c + 1);  // row 1 = 2 * row 0
    s.at(2, c) = 7;
  }
  CHECK(det_bareiss(s) == 0);

  IntMatrix d = IntMatrix::scalar(3, Int(4));
  d.at(1, 1) = -2;
  CHECK(det_bareiss(d) == -32);
}

TEST_CASE("eigenvalues are signed phi powers", "[carlitz]") {
  auto e4 = eigen_powers(4);
  REQUIRE(e4.size() == 4);
  CHECK(e4[0] == phi_pow(3));
  CHECK(e4[1] == -GoldenInt::phi());
  CHECK(e4[2] == -GoldenInt::phi_conj());
  CHECK(e4[3] == conj(phi_pow(3)));

  for (int order = 1; order <= 12; ++order) {
    CharPoly q = char_poly(build_carlitz(order));
    for (const GoldenInt& lambda : eigen_powers(order))
      CHECK(q.eval_as<GoldenInt>(lambda).is_zero());
  }
}

TEST_CASE("eigenvalue power sums collapse to Fibonacci divisors",
          "[carlitz]") {
  auto [l21, r21] = power_sum_identity(2, 1);
  CHECK(l21 == GoldenInt(1));
  CHECK(r21 == GoldenInt(1));
  auto [l53, r53] = power_sum_identity(5, 3);
  CHECK(l53 == GoldenInt(Int(305)));
  CHECK(l53 == r53);
  for (int order = 1; order <= 10; ++order)
    for (long long k = 1; k <= 8; ++k) {
      auto [lhs, rhs] = power_sum_identity(order, k);
      CHECK(lhs == rhs);
    }
}
