#pragma once

#include "sagecirc/linalg.hpp"

#include <optional>
#include <vector>

namespace sagecirc {

enum class LPStatus { OPTIMAL, UNBOUNDED, INFEASIBLE };

/// Outcome of an exact LP solve. `value` and `maximizer` are present iff the
/// status is OPTIMAL.
struct LPResult {
  LPStatus status = LPStatus::INFEASIBLE;
  std::optional<Rational> value;
  std::optional<RationalVector> maximizer;
};

/// General-form exact linear program
///   minimize objectiveᵀz  s.t.  eq_lhs z = eq_rhs,  ineq_lhs z <= ineq_rhs,
/// with per-variable nonnegativity flags (free variables are split
/// internally). Solved by two-phase primal simplex with Bland's rule, so it
/// always terminates and never misclassifies a status.
struct LinearProgram {
  std::size_t num_vars = 0;
  RationalVector objective;           // empty means zero objective
  RationalMatrix eq_lhs;              // may have zero rows
  RationalVector eq_rhs;
  RationalMatrix ineq_lhs;            // may have zero rows
  RationalVector ineq_rhs;
  std::vector<bool> nonneg;           // empty means all variables free
};

struct LPSolution {
  LPStatus status = LPStatus::INFEASIBLE;
  Rational objective_value;           // meaningful iff OPTIMAL
  RationalVector point;               // meaningful iff OPTIMAL
};

LPSolution solve_lp(const LinearProgram& lp);

}  // namespace sagecirc
