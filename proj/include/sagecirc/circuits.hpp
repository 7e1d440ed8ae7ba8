#pragma once

#include "sagecirc/polyhedron.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sagecirc {

/// Ordered set of m distinct rational exponent points in R^n, acting as the
/// linear operator nu -> sum_alpha alpha * nu_alpha.
struct Support {
  std::vector<RationalVector> points;
  std::size_t n = 0;

  std::size_t size() const { return points.size(); }
};

/// Validates distinctness and dimensions. Throws std::invalid_argument.
Support make_support(std::vector<RationalVector> points);

/// The n x m matrix whose columns are the support points.
RationalMatrix support_operator(const Support& s);

/// A nu = sum_alpha alpha nu_alpha in R^n.
RationalVector apply_support(const Support& s, const RationalVector& nu);

/// Normalized sublinear circuit: lambda_beta = -1, lambda >= 0 elsewhere,
/// entries sum to zero, and sigma is the exact support-function value of the
/// constraint set in direction -(A lambda).
struct Circuit {
  RationalVector lambda;
  std::size_t beta = 0;
  Rational sigma;

  bool operator==(const Circuit& other) const = default;
};

/// Affine functional y -> lambda^T y + sigma attached to a circuit.
using FunctionalForm = std::pair<RationalVector, Rational>;

FunctionalForm functional_form(const Circuit& c);

/// lambda^T y + sigma, exact.
Rational evaluate_form(const FunctionalForm& f, const RationalVector& y);

/// Rejects supports on which two exponentials coincide over the constraint
/// set: for some pair, (alpha - alpha') is orthogonal to every direction of
/// the affine hull of X. Also rejects empty X. Throws std::invalid_argument.
void validate_support_against(const Support& s, const HPolyhedron& x);

/// V-form of the shifted polyhedron whose outer facet normals are the
/// circuits with negative entry at `beta`: the Minkowski sum of -A^T X with
/// the polar of the sign cone at beta.
VPolyhedron build_p_polyhedron(const Support& s, const HPolyhedron& x,
                               std::size_t beta);

/// All normalized circuits with negative entry at `beta`, in lexicographic
/// lambda order, each carrying its exact sigma.
std::vector<Circuit> enumerate_circuits(const Support& s, const HPolyhedron& x,
                                        std::size_t beta);

/// Concatenation over all beta, ordered by (beta, lex lambda).
std::vector<Circuit> enumerate_circuits(const Support& s, const HPolyhedron& x);

/// Fast path for conic X given in generator form: the circuits are the edge
/// generators of a single polyhedral cone and every sigma vanishes.
std::vector<Circuit> conic_circuits(const Support& s, const VPolyhedron& x_cone,
                                    std::size_t beta);

/// True iff nu, scaled so its unique negative entry is -1, appears among the
/// enumerated circuits. Vectors with the wrong sign pattern or nonzero sum
/// return false rather than raising.
bool is_circuit(const Support& s, const HPolyhedron& x, const RationalVector& nu);

/// Checks every Circuit invariant exactly; throws std::logic_error on the
/// first violation (used as a postcondition on all enumeration paths).
void check_circuit_invariants(const Support& s, const Circuit& c);

}  // namespace sagecirc
