#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "goldfib/carlitz.hpp"
#include "goldfib/golden_analytic.hpp"
#include "goldfib/golden_ring.hpp"
#include "goldfib/goldpoly.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/render.hpp"
#include "goldfib/scalar.hpp"
#include "goldfib/sequences.hpp"

// Exhaustive and randomized sweeps over every identity the library claims.
// Each suite returns a report with per-check case counts, the first
// counterexample if one ever appears, and a wall-clock duration; reports
// serialize deterministically (checks sorted by name, keys sorted, the
// duration field being the only value allowed to vary between runs).
namespace goldfib::verify {

using Counterexample = std::map<std::string, std::string>;

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::optional<Counterexample> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, long long> params;
  std::vector<CheckResult> checks;
  long long duration_ms = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (c.failures != 0) return false;
    return true;
  }
  long long total_cases() const {
    long long t = 0;
    for (const auto& c : checks) t += c.cases;
    return t;
  }
  long long total_failures() const {
    long long t = 0;
    for (const auto& c : checks) t += c.failures;
    return t;
  }
};

// Sweep bounds. Zero means "use the per-suite default"; the runners record
// the values actually used in the report params.
struct Options {
  long long max_n = 0;
  long long max_k = 0;
  long long max_degree = 0;
  long long samples = 0;
  unsigned long long seed = 0x90110f1bULL;
};

namespace detail {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  template <typename F>
  void tally(bool ok, F&& details) {
    ++r_.cases;
    if (!ok) {
      ++r_.failures;
      if (!r_.counterexample) r_.counterexample = details();
    }
  }
  void tally(bool ok) {
    tally(ok, [] { return Counterexample{}; });
  }
  CheckResult take() { return std::move(r_); }

 private:
  CheckResult r_;
};

inline long long pick(long long value, long long fallback) {
  return value > 0 ? value : fallback;
}

inline long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline GoldenInt random_golden(std::mt19937_64& rng) {
  return GoldenInt(Int(rand_in(rng, -999, 999)), Int(rand_in(rng, -999, 999)));
}

inline Poly<Rat> random_int_poly(std::mt19937_64& rng, long long max_degree) {
  long long deg = rand_in(rng, 0, max_degree);
  std::vector<Rat> coeffs;
  for (long long i = 0; i <= deg; ++i)
    coeffs.push_back(Rat(rand_in(rng, -9, 9)));
  return Poly<Rat>(std::move(coeffs));
}

inline std::vector<Rat> offset_set() {
  return {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
}

template <typename Body>
SuiteReport timed_suite(std::string name,
                        std::map<std::string, long long> params, Body&& body) {
  SuiteReport r;
  r.suite = std::move(name);
  r.params = std::move(params);
  auto t0 = std::chrono::steady_clock::now();
  r.checks = body();
  auto t1 = std::chrono::steady_clock::now();
  r.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  std::sort(r.checks.begin(), r.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  return r;
}

}  // namespace detail

// Ring structure of Z[phi] and Q(phi): axioms, conjugation, norms, the
// Fibonacci shape of phi powers, addition formula and Lucas-style sums.
inline SuiteReport run_ring(const Options& opts = {}) {
  using detail::pick;
  const long long max_index = pick(opts.max_n, 200);
  const long long add_max = pick(opts.max_n, 100);
  const long long lucas_max = pick(opts.max_k, 50);
  const long long samples = pick(opts.samples, 200);

  return detail::timed_suite(
      "ring",
      {{"max_index", max_index},
       {"addition_max", add_max},
       {"lucas_max", lucas_max},
       {"samples", samples},
       {"seed", static_cast<long long>(opts.seed)}},
      [&] {
        std::mt19937_64 rng(opts.seed);
        std::vector<CheckResult> out;

        detail::Check rel("defining_relations");
        const GoldenInt phi = GoldenInt::phi();
        const GoldenInt phic = GoldenInt::phi_conj();
        rel.tally(phi * phi == phi + GoldenInt(1));
        rel.tally(phi * phic == GoldenInt(-1));
        rel.tally(phi + phic == GoldenInt(1));
        rel.tally((phi - phic) * (phi - phic) == GoldenInt(5));
        out.push_back(rel.take());

        detail::Check axioms("ring_axioms");
        for (long long s = 0; s < samples; ++s) {
          GoldenInt x = detail::random_golden(rng);
          GoldenInt y = detail::random_golden(rng);
          GoldenInt z = detail::random_golden(rng);
          bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                    x * y == y * x && x + y == y + x &&
                    x * (y + z) == x * y + x * z &&
                    x + GoldenInt(0) == x && x * GoldenInt(1) == x &&
                    x - x == GoldenInt(0);
          axioms.tally(ok, [&] {
            return Counterexample{{"x", scalar_to_string(x)},
                                  {"y", scalar_to_string(y)},
                                  {"z", scalar_to_string(z)}};
          });
        }
        out.push_back(axioms.take());

        detail::Check hom("conjugation_homomorphism");
        for (long long s = 0; s < samples; ++s) {
          GoldenInt x = detail::random_golden(rng);
          GoldenInt y = detail::random_golden(rng);
          bool ok = conj(conj(x)) == x && conj(x * y) == conj(x) * conj(y) &&
                    conj(x + y) == conj(x) + conj(y);
          hom.tally(ok, [&] {
            return Counterexample{{"x", scalar_to_string(x)},
                                  {"y", scalar_to_string(y)}};
          });
        }
        out.push_back(hom.take());

        detail::Check nm("norm_multiplicative");
        for (long long s = 0; s < samples; ++s) {
          GoldenInt x = detail::random_golden(rng);
          GoldenInt y = detail::random_golden(rng);
          bool ok = norm(x * y) == norm(x) * norm(y) &&
                    GoldenInt(norm(x)) == x * conj(x);
          nm.tally(ok, [&] {
            return Counterexample{{"x", scalar_to_string(x)},
                                  {"y", scalar_to_string(y)}};
          });
        }
        out.push_back(nm.take());

        detail::Check pw("phi_power_components");
        for (long long n = -max_index; n <= max_index; ++n) {
          GoldenInt p = phi_pow(n);
          bool ok = p == GoldenInt(fib(n - 1), fib(n)) &&
                    p * phi_pow(-n) == GoldenInt(1) &&
                    norm(p) == Int(alternating_sign(n));
          pw.tally(ok, [&] {
            return Counterexample{{"n", std::to_string(n)},
                                  {"phi_pow", scalar_to_string(p)}};
          });
        }
        out.push_back(pw.take());

        detail::Check add("addition_formula");
        for (long long n = 0; n <= add_max; ++n)
          for (long long m = 0; m <= add_max; ++m) {
            GoldenInt lhs{fib(n + m)};
            GoldenInt rhs = phi_pow(n) * GoldenInt(fib(m)) +
                            conj(phi_pow(m)) * GoldenInt(fib(n));
            add.tally(lhs == rhs, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"m", std::to_string(m)},
                                    {"lhs", scalar_to_string(lhs)},
                                    {"rhs", scalar_to_string(rhs)}};
            });
          }
        out.push_back(add.take());

        detail::Check le("lucas_even");
        for (long long k = 1; k <= lucas_max; ++k) {
          GoldenInt lhs = phi_pow(2 * k) + phi_pow(-2 * k);
          GoldenInt rhs{fib(2 * k) + 2 * fib(2 * k - 1)};
          le.tally(lhs == rhs, [&] {
            return Counterexample{{"k", std::to_string(k)},
                                  {"lhs", scalar_to_string(lhs)},
                                  {"rhs", scalar_to_string(rhs)}};
          });
        }
        out.push_back(le.take());

        detail::Check lo("lucas_odd");
        for (long long k = 1; k <= lucas_max; ++k) {
          GoldenInt lhs = phi_pow(2 * k + 1) - phi_pow(-(2 * k + 1));
          GoldenInt rhs{fib(2 * k + 1) + 2 * fib(2 * k)};
          lo.tally(lhs == rhs, [&] {
            return Counterexample{{"k", std::to_string(k)},
                                  {"lhs", scalar_to_string(lhs)},
                                  {"rhs", scalar_to_string(rhs)}};
          });
        }
        out.push_back(lo.take());

        detail::Check inv("rational_inverse");
        for (long long s = 0; s < samples; ++s) {
          GoldenRational x(Rat(detail::rand_in(rng, -99, 99),
                               detail::rand_in(rng, 1, 9)),
                           Rat(detail::rand_in(rng, -99, 99),
                               detail::rand_in(rng, 1, 9)));
          if (x.is_zero()) x = GoldenRational(Rat(1));
          bool ok = x * inverse(x) == GoldenRational(Rat(1));
          inv.tally(ok, [&] {
            return Counterexample{{"x", scalar_to_string(x)}};
          });
        }
        out.push_back(inv.take());

        return out;
      });
}

// Fibonacci sequence plumbing and Fibonomial combinatorics: recurrence
// agreement, signed reflection, symmetry, factorial formula, the two golden
// Pascal recursions, and Fibonacci-divisor identities for phi^k powers.
inline SuiteReport run_pascal(const Options& opts = {}) {
  using detail::pick;
  const long long pascal_max = pick(opts.max_n, 60);
  const long long recurrence_max = pick(opts.max_n, 1000);
  const long long reflect_max = pick(opts.max_n, 100);
  const long long phikn_n_max = pick(opts.max_n, 40);
  const long long phikn_k_max = pick(opts.max_k, 12);

  return detail::timed_suite(
      "pascal",
      {{"pascal_max", pascal_max},
       {"recurrence_max", recurrence_max},
       {"reflect_max", reflect_max},
       {"phikn_n_max", phikn_n_max},
       {"phikn_k_max", phikn_k_max}},
      [&] {
        std::vector<CheckResult> out;

        detail::Check rec("fib_recurrence_agreement");
        Int prev(0), cur(1);
        rec.tally(fib(0) == prev);
        for (long long n = 1; n <= recurrence_max; ++n) {
          rec.tally(fib(n) == cur, [&] {
            return Counterexample{{"n", std::to_string(n)},
                                  {"fast_doubling", fib(n).str()},
                                  {"recurrence", cur.str()}};
          });
          Int next = prev + cur;
          prev = cur;
          cur = next;
        }
        out.push_back(rec.take());

        detail::Check refl("fib_negative_reflection");
        for (long long m = 1; m <= reflect_max; ++m) {
          Int expected = (m % 2 == 0) ? Int(-fib(m)) : fib(m);
          refl.tally(fib(-m) == expected, [&] {
            return Counterexample{{"m", std::to_string(m)},
                                  {"fib_neg", fib(-m).str()},
                                  {"expected", expected.str()}};
          });
        }
        out.push_back(refl.take());

        detail::Check sym("fibonomial_symmetry");
        for (long long n = 0; n <= pascal_max; ++n)
          for (long long k = 0; k <= n; ++k)
            sym.tally(fibonomial(n, k) == fibonomial(n, n - k), [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"k", std::to_string(k)}};
            });
        out.push_back(sym.take());

        detail::Check fact("fibonomial_factorial_formula");
        for (long long n = 0; n <= pascal_max; ++n)
          for (long long k = 0; k <= n; ++k) {
            bool ok = fibonomial(n, k) * fib_factorial(k) *
                          fib_factorial(n - k) ==
                      fib_factorial(n);
            fact.tally(ok, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"k", std::to_string(k)}};
            });
          }
        out.push_back(fact.take());

        auto pascal_check = [&](const char* name, PascalForm form) {
          detail::Check ch(name);
          for (long long n = 2; n <= pascal_max; ++n)
            for (long long k = 1; k <= n - 1; ++k) {
              auto [lhs, rhs] = golden_pascal_lhs_rhs(n, k, form);
              ch.tally(lhs == rhs, [&] {
                return Counterexample{{"n", std::to_string(n)},
                                      {"k", std::to_string(k)},
                                      {"lhs", scalar_to_string(lhs)},
                                      {"rhs", scalar_to_string(rhs)}};
              });
            }
          out.push_back(ch.take());
        };
        pascal_check("golden_pascal_first", PascalForm::first);
        pascal_check("golden_pascal_second", PascalForm::second);

        detail::Check unit("fib_divisor_unit_k");
        for (long long n = -reflect_max; n <= reflect_max; ++n)
          unit.tally(fib_divisor(1, n) == fib(n), [&] {
            return Counterexample{{"n", std::to_string(n)}};
          });
        out.push_back(unit.take());

        detail::Check pk("phi_k_power_components");
        for (long long k = 1; k <= phikn_k_max; ++k)
          for (long long n = 0; n <= phikn_n_max; ++n) {
            GoldenInt base = phi_pow(k);
            GoldenInt tail{Int(alternating_sign(k + 1)) *
                           fib_divisor(k, n - 1)};
            GoldenInt lhs = phi_pow(k * n);
            GoldenInt rhs = base * GoldenInt(fib_divisor(k, n)) + tail;
            GoldenInt lhs_c = conj(lhs);
            GoldenInt rhs_c = conj(base) * GoldenInt(fib_divisor(k, n)) + tail;
            bool ok = lhs == rhs && lhs_c == rhs_c;
            pk.tally(ok, [&] {
              return Counterexample{{"k", std::to_string(k)},
                                    {"n", std::to_string(n)},
                                    {"lhs", scalar_to_string(lhs)},
                                    {"rhs", scalar_to_string(rhs)}};
            });
          }
        out.push_back(pk.take());

        return out;
      });
}

// Golden binomials: expansion versus explicit linear-factor product, the
// displayed zero lists, and basic shape (monic, degree, constant term).
inline SuiteReport run_binomial(const Options& opts = {}) {
  using detail::pick;
  const long long max_n = pick(opts.max_n, 40);
  const long long zeros_max = pick(opts.max_n, 20);

  return detail::timed_suite(
      "binomial", {{"max_n", max_n}, {"zeros_max", zeros_max}},
      [&] {
        std::vector<CheckResult> out;
        const std::vector<Rat> offsets = detail::offset_set();

        detail::Check prod("expansion_equals_product");
        for (long long n = 0; n <= max_n; ++n)
          for (const Rat& a : offsets) {
            Poly<Rat> left = golden_binomial(static_cast<int>(n), a);
            Poly<Rat> right =
                collapse_to_base(golden_binomial_product_form(static_cast<int>(n), a));
            prod.tally(left == right, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"a", scalar_to_string(a)},
                                    {"expansion", poly_to_string(left)},
                                    {"product", poly_to_string(right)}};
            });
          }
        out.push_back(prod.take());

        detail::Check zeros("displayed_zero_lists");
        for (long long n = 1; n <= zeros_max; ++n) {
          Poly<Rat> p = golden_binomial(static_cast<int>(n), Rat(1));
          for (long long t = 0, e = n - 1; e >= 0; ++t, e -= 2) {
            GoldenInt base = phi_pow(e);
            std::vector<GoldenInt> roots{base, conj(base)};
            if (e == 0) roots.pop_back();
            for (GoldenInt& root : roots) {
              if (t % 2 != 0) root = -root;
              GoldenRational value = p.eval_as<GoldenRational>(
                  GoldenRational(root));
              zeros.tally(value.is_zero(), [&] {
                return Counterexample{{"n", std::to_string(n)},
                                      {"root", scalar_to_string(root)},
                                      {"value", scalar_to_string(value)}};
              });
            }
          }
        }
        out.push_back(zeros.take());

        detail::Check shape("shape_monic_degree");
        for (long long n = 0; n <= max_n; ++n)
          for (const Rat& a : offsets) {
            Poly<Rat> p = golden_binomial(static_cast<int>(n), a);
            Rat neg_a_pow(1);
            for (long long k = 0; k < n; ++k) neg_a_pow *= -a;
            bool ok = p.degree() == static_cast<int>(n) &&
                      p.coeff(static_cast<int>(n)) == Rat(1) &&
                      p.coeff(0) == Rat(golden_sign(n)) * neg_a_pow;
            shape.tally(ok, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"a", scalar_to_string(a)},
                                    {"poly", poly_to_string(p)}};
            });
          }
        out.push_back(shape.take());

        return out;
      });
}

namespace detail {

// The small golden polynomials P_1..P_7 exactly as displayed: hardcoded
// factor patterns, independent of quadratic_factor_form.
inline std::pair<std::vector<Poly<Rat>>, Int> displayed_p_factors(int m,
                                                                  const Rat& a) {
  const Rat a2 = a * a;
  auto lin = [&](int sign) { return Poly<Rat>{Rat(-sign) * a, Rat(1)}; };
  auto quad = [&](int mid, const Rat& last) {
    return Poly<Rat>{last, Rat(mid) * a, Rat(1)};
  };
  switch (m) {
    case 1: return {{lin(1)}, Int(1)};
    case 2: return {{quad(-1, -a2)}, Int(1)};
    case 3: return {{lin(-1), quad(-3, a2)}, Int(2)};
    case 4: return {{quad(1, -a2), quad(-4, -a2)}, Int(6)};
    case 5: return {{lin(1), quad(3, a2), quad(-7, a2)}, Int(30)};
    case 6: return {{quad(-1, -a2), quad(4, -a2), quad(-11, -a2)}, Int(240)};
    case 7: return {{lin(-1), quad(-3, a2), quad(7, a2), quad(-18, a2)}, Int(3120)};
    default: throw std::domain_error("displayed_p_factors: only m = 1..7");
  }
}

}  // namespace detail

// The golden derivative and everything built on it: agreement with the
// definitional quotient, descent on P_n, golden translation, and the
// quadratic factorization of P_m.
inline SuiteReport run_derivative(const Options& opts = {}) {
  using detail::pick;
  const long long max_n = pick(opts.max_n, 30);
  const long long quad_max = pick(opts.max_n, 20);
  const long long max_degree = pick(opts.max_degree, 20);
  const long long samples = pick(opts.samples, 100);

  return detail::timed_suite(
      "derivative",
      {{"max_n", max_n},
       {"quad_max", quad_max},
       {"max_degree", max_degree},
       {"samples", samples},
       {"seed", static_cast<long long>(opts.seed)}},
      [&] {
        std::mt19937_64 rng(opts.seed);
        std::vector<CheckResult> out;
        const std::vector<Rat> offsets = detail::offset_set();

        detail::Check desc("p_descent");
        for (long long n = 1; n <= max_n; ++n)
          for (const Rat& a : offsets) {
            Poly<Rat> d = golden_derivative(golden_poly_P(static_cast<int>(n), a));
            Poly<Rat> expect = golden_poly_P(static_cast<int>(n) - 1, a);
            desc.tally(d == expect, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"a", scalar_to_string(a)},
                                    {"derivative", poly_to_string(d)},
                                    {"expected", poly_to_string(expect)}};
            });
          }
        out.push_back(desc.take());

        detail::Check defn("definitional_agreement");
        for (long long s = 0; s < samples; ++s) {
          Poly<Rat> p = detail::random_int_poly(rng, max_degree);
          Poly<Rat> closed = golden_derivative(p);
          Poly<Rat> quotient = golden_derivative_definitional(p);
          defn.tally(closed == quotient, [&] {
            return Counterexample{{"p", poly_to_string(p)},
                                  {"closed", poly_to_string(closed)},
                                  {"definitional", poly_to_string(quotient)}};
          });
        }
        out.push_back(defn.take());

        detail::Check lin("linearity");
        for (long long s = 0; s < samples / 4 + 1; ++s) {
          Poly<Rat> p = detail::random_int_poly(rng, max_degree);
          Poly<Rat> q = detail::random_int_poly(rng, max_degree);
          Rat alpha(detail::rand_in(rng, -9, 9), detail::rand_in(rng, 1, 9));
          Poly<Rat> lhs = golden_derivative(p * alpha + q);
          Poly<Rat> rhs = golden_derivative(p) * alpha + golden_derivative(q);
          lin.tally(lhs == rhs, [&] {
            return Counterexample{{"p", poly_to_string(p)},
                                  {"q", poly_to_string(q)},
                                  {"alpha", scalar_to_string(alpha)}};
          });
        }
        out.push_back(lin.take());

        detail::Check tr("translate_monomial");
        for (long long n = 0; n <= max_n; ++n)
          for (const Rat& a : offsets) {
            Poly<Rat> t = golden_translate(Poly<Rat>::monomial(static_cast<int>(n)), a);
            Poly<Rat> expect = golden_binomial(static_cast<int>(n), a);
            tr.tally(t == expect, [&] {
              return Counterexample{{"n", std::to_string(n)},
                                    {"a", scalar_to_string(a)},
                                    {"translate", poly_to_string(t)},
                                    {"expected", poly_to_string(expect)}};
            });
          }
        out.push_back(tr.take());

        detail::Check tz("translate_zero_offset");
        for (long long s = 0; s < 20; ++s) {
          Poly<Rat> p = detail::random_int_poly(rng, max_degree);
          tz.tally(golden_translate(p, Rat(0)) == p, [&] {
            return Counterexample{{"p", poly_to_string(p)}};
          });
        }
        out.push_back(tz.take());

        detail::Check quad("quadratic_factorization");
        for (long long m = 0; m <= quad_max; ++m)
          for (const Rat& a : offsets) {
            Poly<Rat> factored =
                expand_quadratic_factor_form(quadratic_factor_form(static_cast<int>(m), a));
            Poly<Rat> expect = golden_poly_P(static_cast<int>(m), a);
            quad.tally(factored == expect, [&] {
              return Counterexample{{"m", std::to_string(m)},
                                    {"a", scalar_to_string(a)},
                                    {"factored", poly_to_string(factored)},
                                    {"expected", poly_to_string(expect)}};
            });
          }
        out.push_back(quad.take());

        detail::Check disp("displayed_small_p");
        for (int m = 1; m <= 7; ++m)
          for (const Rat& a : offsets) {
            auto [factors, scale] = detail::displayed_p_factors(m, a);
            Poly<Rat> prod{Rat(1)};
            for (const Poly<Rat>& f : factors) prod *= f;
            prod *= Rat(1) / Rat(scale);
            Poly<Rat> expect = golden_poly_P(m, a);
            disp.tally(prod == expect, [&] {
              return Counterexample{{"m", std::to_string(m)},
                                    {"a", scalar_to_string(a)},
                                    {"displayed", poly_to_string(prod)},
                                    {"expected", poly_to_string(expect)}};
            });
          }
        out.push_back(disp.take());

        return out;
      });
}

// Carlitz matrices: the characteristic polynomial theorem, exact eigenvalue
// lists, trace and determinant invariants of powers, and the closed forms
// for powers of the order-2 and order-3 matrices.
inline SuiteReport run_carlitz(const Options& opts = {}) {
  using detail::pick;
  const long long cp_max = pick(opts.max_n, 14);
  const long long eigen_max = pick(opts.max_n, 12);
  const long long order_max = pick(opts.max_n, 10);
  const long long trace_fib_max = pick(opts.max_n, 30);
  const long long a2_max = pick(opts.max_n, 60);
  const long long a3_max = pick(opts.max_n, 40);
  const long long k_max = pick(opts.max_k, 8);

  return detail::timed_suite(
      "carlitz",
      {{"charpoly_max_order", cp_max},
       {"eigen_max_order", eigen_max},
       {"power_order_max", order_max},
       {"trace_fib_max", trace_fib_max},
       {"a2_power_max", a2_max},
       {"a3_power_max", a3_max},
       {"k_max", k_max}},
      [&] {
        std::vector<CheckResult> out;

        detail::Check thm("charpoly_theorem");
        for (long long order = 1; order <= cp_max; ++order)
          thm.tally(verify_charpoly_theorem(static_cast<int>(order)), [&] {
            return Counterexample{
                {"order", std::to_string(order)},
                {"charpoly",
                 poly_to_string(char_poly(build_carlitz(static_cast<int>(order))))}};
          });
        out.push_back(thm.take());

        detail::Check disp("charpoly_displays");
        const std::vector<std::vector<long long>> pinned = {
            {1, -1},
            {1, -1, -1},
            {1, -2, -2, 1},
            {1, -3, -6, 3, 1},
        };
        for (size_t i = 0; i < pinned.size(); ++i) {
          CharPoly q = char_poly(build_carlitz(static_cast<int>(i) + 1));
          std::vector<Int> expect;
          for (auto it = pinned[i].rbegin(); it != pinned[i].rend(); ++it)
            expect.push_back(Int(*it));
          disp.tally(q == CharPoly(expect), [&] {
            return Counterexample{{"order", std::to_string(i + 1)},
                                  {"charpoly", poly_to_string(q)}};
          });
        }
        out.push_back(disp.take());

        detail::Check roots("eigen_roots");
        for (long long order = 1; order <= eigen_max; ++order) {
          CharPoly q = char_poly(build_carlitz(static_cast<int>(order)));
          for (const GoldenInt& lambda : eigen_powers(static_cast<int>(order))) {
            GoldenInt value = q.eval_as<GoldenInt>(lambda);
            roots.tally(value.is_zero(), [&] {
              return Counterexample{{"order", std::to_string(order)},
                                    {"eigenvalue", scalar_to_string(lambda)},
                                    {"value", scalar_to_string(value)}};
            });
          }
        }
        out.push_back(roots.take());

        detail::Check dep("det_eigen_product");
        for (long long order = 1; order <= eigen_max; ++order) {
          GoldenInt prod{Int(1)};
          for (const GoldenInt& lambda : eigen_powers(static_cast<int>(order)))
            prod *= lambda;
          Int det = det_bareiss(build_carlitz(static_cast<int>(order)));
          dep.tally(prod == GoldenInt(det), [&] {
            return Counterexample{{"order", std::to_string(order)},
                                  {"eigen_product", scalar_to_string(prod)},
                                  {"det", det.str()}};
          });
        }
        out.push_back(dep.take());

        detail::Check td("trace_divisor");
        for (long long order = 1; order <= order_max; ++order)
          for (long long k = 1; k <= k_max; ++k) {
            auto [got, expect] = trace_invariant(static_cast<int>(order), k);
            td.tally(got == expect, [&] {
              return Counterexample{{"order", std::to_string(order)},
                                    {"k", std::to_string(k)},
                                    {"trace", got.str()},
                                    {"expected", expect.str()}};
            });
          }
        out.push_back(td.take());

        detail::Check tf("trace_fibonacci");
        for (long long order = 1; order <= trace_fib_max; ++order) {
          Int t = build_carlitz(static_cast<int>(order)).trace();
          tf.tally(t == fib(order), [&] {
            return Counterexample{{"order", std::to_string(order)},
                                  {"trace", t.str()},
                                  {"fib", fib(order).str()}};
          });
        }
        out.push_back(tf.take());

        detail::Check ds("det_power_sign");
        for (long long order = 1; order <= order_max; ++order)
          for (long long k = 0; k <= k_max; ++k) {
            auto [got, expect] = det_invariant(static_cast<int>(order), k);
            ds.tally(got == expect, [&] {
              return Counterexample{{"order", std::to_string(order)},
                                    {"k", std::to_string(k)},
                                    {"det", got.str()},
                                    {"expected", expect.str()}};
            });
          }
        out.push_back(ds.take());

        detail::Check a2("a2_closed_form");
        {
          const IntMatrix a = build_carlitz(2);
          IntMatrix power = IntMatrix::identity(2);
          for (long long n = 0; n <= a2_max; ++n) {
            a2.tally(a2_power_closed_form(n) == power, [&] {
              return Counterexample{{"n", std::to_string(n)}};
            });
            power = power * a;
          }
        }
        out.push_back(a2.take());

        detail::Check a3("a3_closed_form");
        {
          const IntMatrix a = build_carlitz(3);
          IntMatrix power = IntMatrix::identity(3);
          for (long long n = 0; n <= a3_max; ++n) {
            a3.tally(a3_power_closed_form(n) == power, [&] {
              return Counterexample{{"n", std::to_string(n)}};
            });
            power = power * a;
          }
        }
        out.push_back(a3.take());

        detail::Check ps("power_sum_divisor");
        for (long long order = 1; order <= order_max; ++order)
          for (long long k = 1; k <= k_max; ++k) {
            auto [lhs, rhs] = power_sum_identity(static_cast<int>(order), k);
            ps.tally(lhs == rhs, [&] {
              return Counterexample{{"order", std::to_string(order)},
                                    {"k", std::to_string(k)},
                                    {"lhs", scalar_to_string(lhs)},
                                    {"rhs", scalar_to_string(rhs)}};
            });
          }
        out.push_back(ps.take());

        return out;
      });
}

// Complex golden binomials and golden analyticity: expansion versus
// product, recombination of the cosine/sine parts, dbar annihilation,
// Cauchy-Riemann and Laplace equations, and linearity of the extension.
inline SuiteReport run_analytic(const Options& opts = {}) {
  using detail::pick;
  const long long binom_max = pick(opts.max_n, 20);
  const long long mono_max = pick(opts.max_degree, 20);
  const long long rand_deg = std::min(pick(opts.max_degree, 12), 12LL);
  const long long samples = pick(opts.samples, 100);

  return detail::timed_suite(
      "analytic",
      {{"binomial_max", binom_max},
       {"monomial_max_degree", mono_max},
       {"random_max_degree", rand_deg},
       {"samples", samples},
       {"seed", static_cast<long long>(opts.seed)}},
      [&] {
        std::mt19937_64 rng(opts.seed);
        std::vector<CheckResult> out;

        detail::Check prod("expansion_equals_product");
        for (long long n = 0; n <= binom_max; ++n) {
          ComplexBiPoly<Rat> left = complex_golden_binomial(static_cast<int>(n));
          ComplexBiPoly<Rat> right =
              collapse_to_base(complex_golden_binomial_product_form(static_cast<int>(n)));
          prod.tally(left == right, [&] {
            return Counterexample{{"n", std::to_string(n)}};
          });
        }
        out.push_back(prod.take());

        detail::Check recomb("cos_sin_recombination");
        for (long long m = 0; m <= binom_max; ++m) {
          auto [u, v] = cos_sin_parts(Poly<Rat>::monomial(static_cast<int>(m)));
          ComplexBiPoly<Rat> joined{std::move(u), std::move(v)};
          recomb.tally(joined == complex_golden_binomial(static_cast<int>(m)),
                       [&] {
                         return Counterexample{{"m", std::to_string(m)}};
                       });
        }
        out.push_back(recomb.take());

        detail::Check db("dbar_binomials");
        for (long long n = 0; n <= binom_max; ++n)
          db.tally(check_dbar(static_cast<int>(n)), [&] {
            return Counterexample{{"n", std::to_string(n)}};
          });
        out.push_back(db.take());

        detail::Check crm("cauchy_riemann_monomials");
        for (long long d = 0; d <= mono_max; ++d)
          crm.tally(check_cauchy_riemann(Poly<Rat>::monomial(static_cast<int>(d))),
                    [&] {
                      return Counterexample{{"degree", std::to_string(d)}};
                    });
        out.push_back(crm.take());

        detail::Check lpm("laplace_monomials");
        for (long long d = 0; d <= mono_max; ++d)
          lpm.tally(check_laplace(Poly<Rat>::monomial(static_cast<int>(d))), [&] {
            return Counterexample{{"degree", std::to_string(d)}};
          });
        out.push_back(lpm.take());

        detail::Check crr("cauchy_riemann_random");
        detail::Check lpr("laplace_random");
        detail::Check dbr("dbar_random");
        for (long long s = 0; s < samples; ++s) {
          Poly<Rat> f = detail::random_int_poly(rng, rand_deg);
          auto ce = [&] { return Counterexample{{"f", poly_to_string(f)}}; };
          crr.tally(check_cauchy_riemann(f), ce);
          lpr.tally(check_laplace(f), ce);
          dbr.tally(check_dbar_poly(f), ce);
        }
        out.push_back(crr.take());
        out.push_back(lpr.take());
        out.push_back(dbr.take());

        detail::Check lin("extension_linearity");
        for (long long s = 0; s < 30; ++s) {
          Poly<Rat> p = detail::random_int_poly(rng, rand_deg);
          Poly<Rat> q = detail::random_int_poly(rng, rand_deg);
          Rat alpha(detail::rand_in(rng, -9, 9), detail::rand_in(rng, 1, 9));
          auto [pu, pv] = cos_sin_parts(p);
          auto [qu, qv] = cos_sin_parts(q);
          auto [su, sv] = cos_sin_parts(p * alpha + q);
          bool ok = su == pu * alpha + qu && sv == pv * alpha + qv;
          lin.tally(ok, [&] {
            return Counterexample{{"p", poly_to_string(p)},
                                  {"q", poly_to_string(q)},
                                  {"alpha", scalar_to_string(alpha)}};
          });
        }
        out.push_back(lin.take());

        return out;
      });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "analytic", "binomial", "carlitz", "derivative", "pascal", "ring"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const Options& opts = {}) {
  if (name == "analytic") return run_analytic(opts);
  if (name == "binomial") return run_binomial(opts);
  if (name == "carlitz") return run_carlitz(opts);
  if (name == "derivative") return run_derivative(opts);
  if (name == "pascal") return run_pascal(opts);
  if (name == "ring") return run_ring(opts);
  throw std::domain_error("unknown suite: " + name);
}

// Expands "all", deduplicates, and runs the requested suites in sorted
// order so that output ordering never depends on the command line.
inline std::vector<SuiteReport> run_suites(std::vector<std::string> names,
                                           const Options& opts = {}) {
  std::vector<std::string> expanded;
  for (std::string& n : names) {
    if (n == "all") {
      for (const std::string& s : suite_names()) expanded.push_back(s);
    } else {
      expanded.push_back(std::move(n));
    }
  }
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()),
                 expanded.end());
  std::vector<SuiteReport> out;
  out.reserve(expanded.size());
  for (const std::string& n : expanded) out.push_back(run_suite(n, opts));
  return out;
}

inline nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::json ce;
    if (c.counterexample) {
      ce = nlohmann::json::object();
      for (const auto& [k, v] : *c.counterexample) ce[k] = v;
    }
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"counterexample", std::move(ce)}});
  }
  return {{"suite", r.suite},
          {"params", std::move(params)},
          {"checks", std::move(checks)},
          {"duration_ms", r.duration_ms}};
}

inline nlohmann::json reports_to_json(const std::vector<SuiteReport>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const SuiteReport& r : rs) out.push_back(report_to_json(r));
  return out;
}

inline std::string reports_to_pretty(const std::vector<SuiteReport>& rs) {
  std::string out;
  bool all_passed = true;
  for (const SuiteReport& r : rs) {
    all_passed = all_passed && r.passed();
    out += "suite " + r.suite + ": " + std::to_string(r.checks.size()) +
           " checks, " + std::to_string(r.total_cases()) + " cases, " +
           std::to_string(r.total_failures()) + " failures, " +
           std::to_string(r.duration_ms) + " ms  [" +
           (r.passed() ? "PASS" : "FAIL") + "]\n";
    for (const CheckResult& c : r.checks) {
      out += "  " + c.name + ": " + std::to_string(c.cases) + " cases, " +
             std::to_string(c.failures) + " failures\n";
      if (c.counterexample) {
        out += "    counterexample:";
        for (const auto& [k, v] : *c.counterexample)
          out += " " + k + "=" + v;
        out += "\n";
      }
    }
  }
  out += std::string("overall: ") + (all_passed ? "PASS" : "FAIL") + "\n";
  return out;
}

inline std::string reports_to_csv(const std::vector<SuiteReport>& rs) {
  std::string out = "suite,check,cases,failures\n";
  for (const SuiteReport& r : rs)
    for (const CheckResult& c : r.checks)
      out += r.suite + "," + c.name + "," + std::to_string(c.cases) + "," +
             std::to_string(c.failures) + "\n";
  return out;
}

inline bool all_passed(const std::vector<SuiteReport>& rs) {
  for (const SuiteReport& r : rs)
    if (!r.passed()) return false;
  return true;
}

}  // namespace goldfib::verify
