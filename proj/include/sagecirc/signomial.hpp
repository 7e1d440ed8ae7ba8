#pragma once

#include "sagecirc/circuits.hpp"

#include <optional>
#include <vector>

namespace sagecirc {

/// Coefficient vector over a Support. Exact coefficients are kept alongside
/// the double view when the input was rational, and downstream code follows
/// the exact path where it can.
struct Signomial {
  Support support;
  std::vector<double> coeffs;
  std::optional<RationalVector> exact_coeffs;

  bool is_rational() const { return exact_coeffs.has_value(); }
};

Signomial make_signomial(Support support, RationalVector exact_coeffs);
Signomial make_signomial(Support support, std::vector<double> coeffs);

/// f(x) = sum_alpha c_alpha exp(alpha . x).
double evaluate(const Signomial& f, const std::vector<double>& x);

/// Axis-aligned evaluation box with a common per-dimension resolution.
struct GridBox {
  std::vector<double> lo;
  std::vector<double> hi;
  std::size_t resolution = 0;  // points per dimension, >= 1
};

/// Minimum of f over the grid. Upper-bounds the true minimum, so it can
/// refute nonnegativity but never certify it.
double grid_min(const Signomial& f, const GridBox& box);

}  // namespace sagecirc
