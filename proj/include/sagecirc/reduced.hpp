#pragma once

#include "sagecirc/circuits.hpp"

#include <vector>

namespace sagecirc {

/// Conic hull of the circuit functional forms together with the constant
/// functional (0, 1), embedded in R^(m+1). Pointedness is asserted at
/// construction by exhibiting a strictly positive functional.
struct CircuitGraph {
  std::size_t ambient = 0;        // m = |support|
  std::vector<Circuit> circuits;  // canonical (beta, lex lambda) order

  /// Functional forms followed by the distinguished generator (0, 1),
  /// embedded as vectors in R^(m+1).
  std::vector<RationalVector> generators() const;
};

/// `ambient` fixes m when the circuit list is empty; otherwise it is
/// inferred (and cross-checked) from the circuits.
CircuitGraph build_circuit_graph(std::vector<Circuit> circuits,
                                 std::size_t ambient = 0);

/// The circuits whose functional forms generate extreme rays of the graph.
struct ReducedSet {
  std::vector<Circuit> circuits;
  std::vector<std::size_t> graph_indices;  // positions in the source graph
};

/// Per-generator extremality test by exact LP: a circuit is reduced iff its
/// functional form is not a nonnegative combination of the remaining
/// generators plus (0, 1).
ReducedSet reduced_circuits(const CircuitGraph& g);

/// A vector y with form(other)(y) >= 0 for every other reduced circuit and
/// form(target)(y) <= -1 (any strictly negative value certifies minimality;
/// -1 is the LP normalization). Throws std::invalid_argument when no such
/// separator exists, i.e. the target is not actually reduced.
RationalVector minimality_witness(const ReducedSet& r, const Circuit& target);

/// Exponentiated separating hyperplane: with u = form(target)(y) < 0,
///   z_alpha = lambda_alpha e^{-y_alpha} on the positive support,
///   z_beta  = -e^{-u - y_beta},
/// zeros elsewhere. Then z . exp(y) = 1 - e^{-u} < 0 while z is nonnegative
/// on every dual-feasible moment vector. Throws when u >= 0.
std::vector<double> separating_functional(const RationalVector& y,
                                          const Circuit& target);

/// Exact log-domain dual feasibility: form(c)(y) >= 0 for every circuit.
bool dual_feasible_log(const RationalVector& y, const std::vector<Circuit>& cs);

}  // namespace sagecirc
