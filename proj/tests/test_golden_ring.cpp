#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "goldfib/golden_ring.hpp"
#include "goldfib/sequences.hpp"
#include "oracles.hpp"

using goldfib::GoldenInt;
using goldfib::GoldenRational;
using goldfib::Int;
using goldfib::Rat;
using goldfib::inverse;
using goldfib::phi_pow;

namespace {

GoldenInt rand_golden(std::mt19937_64& rng) {
  auto draw = [&] { return Int(static_cast<long long>(rng() % 2001) - 1000); };
  return GoldenInt(draw(), draw());
}

}  // namespace

TEST_CASE("defining relations of phi and its conjugate", "[golden_ring]") {
  const GoldenInt phi = GoldenInt::phi();
  const GoldenInt phic = GoldenInt::phi_conj();
  CHECK(phi * phi == phi + GoldenInt(1));
  CHECK(phi * phic == GoldenInt(-1));
  CHECK(phi + phic == GoldenInt(1));
  CHECK(conj(phi) == phic);
  CHECK((phi - phic) * (phi - phic) == GoldenInt(5));
}

TEST_CASE("multiplication reduces through phi^2 = phi + 1", "[golden_ring]") {
  // (1 + 2 phi)(3 + phi) = 3 + phi + 6 phi + 2 phi^2 = 5 + 9 phi
  CHECK(GoldenInt(Int(1), Int(2)) * GoldenInt(Int(3), Int(1)) ==
        GoldenInt(Int(5), Int(9)));
  CHECK(GoldenInt(Int(2), Int(0)) * GoldenInt(Int(0), Int(3)) ==
        GoldenInt(Int(0), Int(6)));
}

TEST_CASE("ring axioms hold on random samples", "[golden_ring]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    GoldenInt x = rand_golden(rng), y = rand_golden(rng), z = rand_golden(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + GoldenInt(0) == x);
    CHECK(x * GoldenInt(1) == x);
    CHECK(x - x == GoldenInt(0));
    CHECK(-(-x) == x);
  }
}

TEST_CASE("conjugation is an involutive ring homomorphism", "[golden_ring]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    GoldenInt x = rand_golden(rng), y = rand_golden(rng);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x + y) == conj(x) + conj(y));
    CHECK(conj(x * y) == conj(x) * conj(y));
  }
  CHECK(conj(GoldenInt(Int(3), Int(5))) == GoldenInt(Int(8), Int(-5)));
}

TEST_CASE("conjugate of phi^5 matches repeated multiplication", "[golden_ring]") {
  GoldenInt slow = oracles::slow_phi_pow(5);
  CHECK(slow == GoldenInt(Int(3), Int(5)));
  CHECK(conj(phi_pow(5)) == conj(slow));
  CHECK(conj(phi_pow(5)) == GoldenInt(Int(8), Int(-5)));
}

TEST_CASE("norm is multiplicative and equals x * conj(x)", "[golden_ring]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    GoldenInt x = rand_golden(rng), y = rand_golden(rng);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(x * conj(x) == GoldenInt(norm(x)));
  }
  CHECK(norm(GoldenInt::phi()) == Int(-1));
  CHECK(norm(GoldenInt(2)) == Int(4));
  CHECK(norm(phi_pow(6)) == Int(1));
}

TEST_CASE("phi_pow matches the slow product and the Fibonacci shape",
          "[golden_ring]") {
  for (long long n = -200; n <= 200; ++n) {
    GoldenInt p = phi_pow(n);
    CHECK(p == oracles::slow_phi_pow(n));
    CHECK(p == GoldenInt(goldfib::fib(n - 1), goldfib::fib(n)));
    CHECK(p * phi_pow(-n) == GoldenInt(1));
  }
  CHECK(phi_pow(0) == GoldenInt(1));
  CHECK(phi_pow(1) == GoldenInt::phi());
  CHECK(phi_pow(5) == GoldenInt(Int(3), Int(5)));
  CHECK(phi_pow(-1) == GoldenInt(Int(-1), Int(1)));
}

TEST_CASE("conjugate powers follow from the homomorphism", "[golden_ring]") {
  for (long long n = 0; n <= 60; ++n)
    CHECK(conj(phi_pow(n)) == GoldenInt::phi_conj().pow(
                                  static_cast<unsigned long long>(n)));
}

TEST_CASE("addition formula for Fibonacci in Z[phi]", "[golden_ring]") {
  for (long long n = 0; n <= 40; ++n)
    for (long long m = 0; m <= 40; ++m) {
      GoldenInt lhs{goldfib::fib(n + m)};
      GoldenInt rhs = phi_pow(n) * GoldenInt(goldfib::fib(m)) +
                      conj(phi_pow(m)) * GoldenInt(goldfib::fib(n));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Lucas-style even and odd power sums", "[golden_ring]") {
  for (long long k = 1; k <= 30; ++k) {
    CHECK(phi_pow(2 * k) + phi_pow(-2 * k) ==
          GoldenInt(goldfib::fib(2 * k) + 2 * goldfib::fib(2 * k - 1)));
    CHECK(phi_pow(2 * k + 1) - phi_pow(-(2 * k + 1)) ==
          GoldenInt(goldfib::fib(2 * k + 1) + 2 * goldfib::fib(2 * k)));
  }
}

TEST_CASE("golden rationals invert through conjugate over norm",
          "[golden_ring]") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] {
      return Rat(static_cast<long long>(rng() % 199) - 99,
                 static_cast<long long>(rng() % 9) + 1);
    };
    GoldenRational x(draw(), draw());
    if (x.is_zero()) continue;
    CHECK(x * inverse(x) == GoldenRational(Rat(1)));
    CHECK(x / x == GoldenRational(Rat(1)));
  }
  // 1 / (phi - phi') = (-1 + 2 phi) / 5
  GoldenRational spread = GoldenRational::phi() - GoldenRational::phi_conj();
  CHECK(inverse(spread) == GoldenRational(Rat(-1, 5), Rat(2, 5)));
}

TEST_CASE("inverting zero is a domain error", "[golden_ring]") {
  CHECK_THROWS_AS(inverse(GoldenRational()), std::domain_error);
}

TEST_CASE("norm vanishes only at zero over the rationals", "[golden_ring]") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] {
      return Rat(static_cast<long long>(rng() % 199) - 99,
                 static_cast<long long>(rng() % 9) + 1);
    };
    GoldenRational x(draw(), draw());
    if (!x.is_zero()) CHECK(norm(x) != Rat(0));
  }
}

TEST_CASE("embedding Z[phi] into Q(phi) respects the operations",
          "[golden_ring]") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    GoldenInt x = rand_golden(rng), y = rand_golden(rng);
    GoldenRational xr{x}, yr{y};
    CHECK(GoldenRational(x * y) == xr * yr);
    CHECK(GoldenRational(x + y) == xr + yr);
    CHECK(GoldenRational(conj(x)) == conj(xr));
  }
}
