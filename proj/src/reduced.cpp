#include "sagecirc/reduced.hpp"

#include "sagecirc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sagecirc {

namespace {

RationalVector embed(const Circuit& c) {
  RationalVector g = c.lambda;
  g.push_back(c.sigma);
  return g;
}

// A pointed finitely generated cone admits a functional strictly positive on
// every generator; solve for one with margin 1.
bool cone_is_pointed(const std::vector<RationalVector>& gens, std::size_t dim) {
  LinearProgram lp;
  lp.num_vars = dim;
  lp.ineq_lhs = RationalMatrix(0, dim);
  for (const auto& g : gens) {
    lp.ineq_lhs.append_row(negate(g));
    lp.ineq_rhs.push_back(Rational(-1));
  }
  return solve_lp(lp).status == LPStatus::OPTIMAL;
}

// Is target a nonnegative combination of the given generators?
bool in_cone(const RationalVector& target,
             const std::vector<RationalVector>& gens) {
  if (gens.empty()) return is_zero(target);
  LinearProgram lp;
  lp.num_vars = gens.size();
  lp.nonneg.assign(gens.size(), true);
  lp.eq_lhs = RationalMatrix(target.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i)
      lp.eq_lhs.at(i, j) = gens[j][i];
  lp.eq_rhs = target;
  return solve_lp(lp).status == LPStatus::OPTIMAL;
}

}  // namespace

std::vector<RationalVector> CircuitGraph::generators() const {
  std::vector<RationalVector> gens;
  gens.reserve(circuits.size() + 1);
  for (const auto& c : circuits) gens.push_back(embed(c));
  RationalVector constant(ambient + 1);
  constant[ambient] = 1;
  gens.push_back(std::move(constant));
  return gens;
}

CircuitGraph build_circuit_graph(std::vector<Circuit> circuits,
                                 std::size_t ambient) {
  for (const auto& c : circuits) {
    if (ambient == 0) ambient = c.lambda.size();
    if (c.lambda.size() != ambient)
      throw std::invalid_argument("mixed circuit dimensions");
    if (c.lambda[c.beta] != -1)
      throw std::invalid_argument("circuits must be normalized");
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              if (a.beta != b.beta) return a.beta < b.beta;
              return lex_less(a.lambda, b.lambda);
            });
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  CircuitGraph g{ambient, std::move(circuits)};
  if (!g.circuits.empty() && !cone_is_pointed(g.generators(), g.ambient + 1))
    throw std::logic_error("circuit graph is not pointed");
  return g;
}

ReducedSet reduced_circuits(const CircuitGraph& g) {
  ReducedSet out;
  const std::vector<RationalVector> gens = g.generators();
  for (std::size_t i = 0; i < g.circuits.size(); ++i) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!in_cone(gens[i], others)) {
      out.circuits.push_back(g.circuits[i]);
      out.graph_indices.push_back(i);
    }
  }
  return out;
}

RationalVector minimality_witness(const ReducedSet& r, const Circuit& target) {
  const std::size_t m = target.lambda.size();
  bool member = false;
  RationalMatrix side(0, m);
  RationalVector side_rhs;
  for (const auto& c : r.circuits) {
    if (c == target) {
      member = true;
      continue;
    }
    // form(c)(y) >= 0  <=>  -lambda^T y <= sigma
    side.append_row(negate(c.lambda));
    side_rhs.push_back(c.sigma);
  }
  if (!member) throw std::invalid_argument("target not in reduced set");

  // First try the normalized separation form(target)(y) <= -1, pushing the
  // separation value onto the -1 level so witnesses stay well scaled.
  {
    LinearProgram lp;
    lp.num_vars = m;
    lp.objective = negate(target.lambda);  // maximize form(target)(y)
    lp.ineq_lhs = side;
    lp.ineq_rhs = side_rhs;
    lp.ineq_lhs.append_row(target.lambda);
    lp.ineq_rhs.push_back(Rational(-1) - target.sigma);
    const LPSolution sol = solve_lp(lp);
    if (sol.status == LPStatus::OPTIMAL) return sol.point;
  }

  // The -1 level may be unreachable when the separation value is bounded;
  // any strictly negative value still certifies minimality.
  LinearProgram lp;
  lp.num_vars = m;
  lp.objective = target.lambda;
  lp.ineq_lhs = side;
  lp.ineq_rhs = side_rhs;
  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::OPTIMAL)
    throw std::logic_error("separation subproblem degenerate");
  if (sol.objective_value + target.sigma >= 0)
    throw std::invalid_argument("target is not a reduced circuit");
  return sol.point;
}

std::vector<double> separating_functional(const RationalVector& y,
                                          const Circuit& target) {
  const Rational u_exact = evaluate_form(functional_form(target), y);
  if (u_exact >= 0)
    throw std::invalid_argument("separation value must be negative");
  const double u = static_cast<double>(u_exact);

  std::vector<double> z(target.lambda.size(), 0.0);
  for (std::size_t j = 0; j < target.lambda.size(); ++j) {
    if (j == target.beta) {
      z[j] = -std::exp(-u - static_cast<double>(y[j]));
    } else if (target.lambda[j] > 0) {
      z[j] = static_cast<double>(target.lambda[j]) *
             std::exp(-static_cast<double>(y[j]));
    }
  }
  return z;
}

bool dual_feasible_log(const RationalVector& y, const std::vector<Circuit>& cs) {
  for (const auto& c : cs)
    if (evaluate_form(functional_form(c), y) < 0) return false;
  return true;
}

}  // namespace sagecirc
