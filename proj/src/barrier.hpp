#pragma once

// Internal max-slack solver for fixed-circuit power-cone decompositions.

#include "sagecirc/circuits.hpp"

#include <vector>

namespace sagecirc::detail {

struct MaxSlackProblem {
  std::vector<Circuit> circuits;  // fixed witness circuits
  std::vector<double> target;     // coefficient vector c
};

struct MaxSlackSolution {
  bool converged = false;
  double slack = 0;  // optimal t in coefficient units
  std::vector<std::vector<double>> term_coeffs;  // per circuit, length m
  std::vector<double> residual;                  // length m
};

/// maximize t subject to
///   sum_k c^k + residual = c,
///   residual >= t (componentwise),
///   g_k(c^k over lambda+) + c^k_beta e^{sigma_k} >= t for every k,
///   c^k >= 0 on lambda+,
/// via a log-barrier with damped Newton steps. `duality_stop` is the target
/// duality measure (barrier weight times number of inequality terms).
MaxSlackSolution solve_max_slack(const MaxSlackProblem& p,
                                 double duality_stop = 1e-9);

}  // namespace sagecirc::detail
