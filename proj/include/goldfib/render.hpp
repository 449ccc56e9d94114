#pragma once

#include <string>
#include <vector>

#include "goldfib/carlitz.hpp"
#include "goldfib/golden_ring.hpp"
#include "goldfib/poly.hpp"
#include "goldfib/scalar.hpp"

namespace goldfib {

inline std::string scalar_to_string(const Int& v) { return v.str(); }
inline std::string scalar_to_string(const Rat& v) { return v.str(); }

// Golden scalars render as "a + b*phi", omitting whichever side is absent.
template <typename T>
std::string scalar_to_string(const GoldenScalar<T>& v) {
  if (v.phi_part() == T(0)) return scalar_to_string(v.unit_part());
  std::string phi_mag = scalar_to_string(v.phi_part() < T(0)
                                             ? T(-v.phi_part())
                                             : v.phi_part());
  std::string phi_term = phi_mag == "1" ? "phi" : phi_mag + "*phi";
  if (v.unit_part() == T(0))
    return v.phi_part() < T(0) ? "-" + phi_term : phi_term;
  return scalar_to_string(v.unit_part()) +
         (v.phi_part() < T(0) ? " - " : " + ") + phi_term;
}

namespace detail {

inline bool display_negative(const Int& v) { return v < 0; }
inline bool display_negative(const Rat& v) { return v < 0; }
template <typename T>
bool display_negative(const GoldenScalar<T>& v) {
  // mixed golden coefficients render in parentheses with their own sign
  return v.phi_part() == T(0) && display_negative(v.unit_part());
}

inline std::string magnitude_string(const Int& v) { return Int(abs(v)).str(); }
inline std::string magnitude_string(const Rat& v) {
  return Rat(abs(v)).str();
}
template <typename T>
std::string magnitude_string(const GoldenScalar<T>& v) {
  if (v.phi_part() == T(0)) return magnitude_string(v.unit_part());
  return "(" + scalar_to_string(v) + ")";
}

}  // namespace detail

// Human-readable polynomial, highest degree first: "x^2 - x - 1",
// "1/2*x^3 - x^2 - x + 1/2", "(x - (1 + phi))" style for golden factors.
template <ring_scalar R>
std::string poly_to_string(const Poly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    R c = p.coeff(i);
    if (c == R(0)) continue;
    bool neg = detail::display_negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = detail::magnitude_string(c);
    std::string power =
        i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (power.empty())
      out += mag;
    else if (mag == "1")
      out += power;
    else
      out += mag + "*" + power;
  }
  return out;
}

// Coefficient strings from highest degree down to the constant term.
template <ring_scalar R>
std::vector<std::string> poly_coeff_strings(const Poly<R>& p) {
  std::vector<std::string> out;
  for (int i = p.degree(); i >= 0; --i)
    out.push_back(scalar_to_string(p.coeff(i)));
  if (out.empty()) out.push_back("0");
  return out;
}

inline std::vector<std::vector<std::string>> matrix_to_strings(
    const IntMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < m.order(); ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < m.order(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace goldfib
