#pragma once

#include "sagecirc/certify.hpp"

#include <vector>

namespace sagecirc {

/// Strictly increasing rational exponents on the real line.
struct SortedAlphas {
  std::vector<Rational> alphas;

  std::size_t size() const { return alphas.size(); }
};

SortedAlphas make_sorted_alphas(std::vector<Rational> alphas);

/// The corresponding 1-dimensional Support.
Support to_support(const SortedAlphas& a);

/// The half line [0, inf) as an inequality system in R^1.
HPolyhedron half_line_domain();

/// Closed-form circuits of the half line: two-term differences delta_k -
/// delta_j for j < k plus the three-term zero-mean combinations for
/// i < j < k, all with sigma = 0. Count is C(m,2) + C(m,3).
std::vector<Circuit> univariate_circuits(const SortedAlphas& a);

/// Closed-form reduced circuits: delta_1 - delta_0 plus one three-term
/// circuit per interior exponent. Count is m - 1.
std::vector<Circuit> univariate_reduced(const SortedAlphas& a);

/// Boundary extreme-ray generator with support {i-1, i, i+1} (0-based
/// interior i): outer coefficients c_lo, c_hi > 0, middle coefficient the
/// negated weighted geometric mean. Requires the ratio condition
/// c_lo / c_hi >= lambda_lo / lambda_hi; otherwise the signomial would be
/// strictly positive on the half line and is rejected. The middle
/// coefficient is exact when the r-th root extraction succeeds.
Signomial extreme_generator(const SortedAlphas& a, std::size_t i,
                            const Rational& c_lo, const Rational& c_hi);

enum class ExtremeClass { TYPE1, TYPE2, TYPE3, NOT_EXTREME, NOT_MEMBER };

/// Extreme-ray classification of the half-line cone: positive multiples of
/// the lowest exponential (TYPE1), of the first two-term difference (TYPE2),
/// or boundary three-term generators (TYPE3). Members matching none of the
/// patterns are NOT_EXTREME. Membership is decided first.
ExtremeClass classify_extreme(const Signomial& f, const SortedAlphas& a,
                              const CertifyOptions& opts = {});

/// Stationary point of a TYPE3 generator (used to cross-check minimizers).
double extreme_minimizer(const SortedAlphas& a, std::size_t i,
                         const Rational& c_lo, const Rational& c_hi);

}  // namespace sagecirc
