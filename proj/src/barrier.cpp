#include "barrier.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace sagecirc::detail {

namespace {

// Variables are z = [t | per-circuit support entries]; the residual is the
// dependent quantity c - sum of term entries, so the coefficient identity
// holds by construction and cannot drift numerically.
struct Layout {
  std::vector<std::vector<std::size_t>> circuit_support;  // ascending indices
  std::vector<std::size_t> circuit_offset;
  std::size_t size = 0;
};

Layout make_layout(const MaxSlackProblem& p) {
  Layout lay;
  std::size_t next = 1;
  for (const auto& c : p.circuits) {
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < c.lambda.size(); ++j)
      if (c.lambda[j] != 0) supp.push_back(j);
    lay.circuit_offset.push_back(next);
    next += supp.size();
    lay.circuit_support.push_back(std::move(supp));
  }
  lay.size = next;
  return lay;
}

struct Barrier {
  const MaxSlackProblem& p;
  const Layout& lay;
  std::vector<std::vector<double>> weights;  // lambda restricted to support
  std::vector<double> exp_sigma;
  std::vector<double> target;                // scaled coefficient vector
  std::size_t m;
  // index pairs (variable, coordinate) contributing to each residual
  std::vector<std::vector<std::size_t>> coord_vars;

  Barrier(const MaxSlackProblem& prob, const Layout& layout,
          std::vector<double> scaled_target)
      : p(prob), lay(layout), target(std::move(scaled_target)),
        m(prob.target.size()) {
    for (std::size_t k = 0; k < p.circuits.size(); ++k) {
      std::vector<double> w;
      for (std::size_t j : lay.circuit_support[k])
        w.push_back(static_cast<double>(p.circuits[k].lambda[j]));
      weights.push_back(std::move(w));
      exp_sigma.push_back(std::exp(static_cast<double>(p.circuits[k].sigma)));
    }
    coord_vars.assign(m, {});
    for (std::size_t k = 0; k < p.circuits.size(); ++k) {
      const auto& supp = lay.circuit_support[k];
      for (std::size_t s = 0; s < supp.size(); ++s)
        coord_vars[supp[s]].push_back(lay.circuit_offset[k] + s);
    }
  }

  double residual_at(std::size_t a, const Eigen::VectorXd& z) const {
    double r = target[a];
    for (std::size_t v : coord_vars[a]) r -= z[v];
    return r;
  }

  double geomean(std::size_t k, const Eigen::VectorXd& z) const {
    double log_g = 0;
    const auto& supp = lay.circuit_support[k];
    for (std::size_t s = 0; s < supp.size(); ++s) {
      const double w = weights[k][s];
      if (w <= 0) continue;
      const double x = z[lay.circuit_offset[k] + s];
      log_g += w * (std::log(x) - std::log(w));
    }
    return std::exp(log_g);
  }

  double slack_term(std::size_t k, const Eigen::VectorXd& z) const {
    const auto& supp = lay.circuit_support[k];
    double beta_coeff = 0;
    for (std::size_t s = 0; s < supp.size(); ++s)
      if (supp[s] == p.circuits[k].beta) beta_coeff = z[lay.circuit_offset[k] + s];
    return geomean(k, z) + beta_coeff * exp_sigma[k] - z[0];
  }

  bool strictly_feasible(const Eigen::VectorXd& z) const {
    for (std::size_t k = 0; k < p.circuits.size(); ++k) {
      const auto& supp = lay.circuit_support[k];
      for (std::size_t s = 0; s < supp.size(); ++s)
        if (weights[k][s] > 0 && z[lay.circuit_offset[k] + s] <= 0) return false;
      if (slack_term(k, z) <= 0) return false;
    }
    for (std::size_t a = 0; a < m; ++a)
      if (residual_at(a, z) - z[0] <= 0) return false;
    return true;
  }

  double value(const Eigen::VectorXd& z, double mu) const {
    double v = -z[0];
    for (std::size_t k = 0; k < p.circuits.size(); ++k) {
      const auto& supp = lay.circuit_support[k];
      for (std::size_t s = 0; s < supp.size(); ++s)
        if (weights[k][s] > 0) v -= mu * std::log(z[lay.circuit_offset[k] + s]);
      v -= mu * std::log(slack_term(k, z));
    }
    for (std::size_t a = 0; a < m; ++a)
      v -= mu * std::log(residual_at(a, z) - z[0]);
    return v;
  }

  void derivatives(const Eigen::VectorXd& z, double mu, Eigen::VectorXd& grad,
                   Eigen::MatrixXd& hess) const {
    grad.setZero(lay.size);
    hess.setZero(lay.size, lay.size);
    grad[0] = -1;

    // Residual barriers: r_a = target_a - sum(entries) - t, d(-log r) uses
    // the constant gradient (-1 on t and on every contributing entry).
    for (std::size_t a = 0; a < m; ++a) {
      const double r = residual_at(a, z) - z[0];
      const double g1 = mu / r;
      const double g2 = mu / (r * r);
      grad[0] += g1;
      for (std::size_t v : coord_vars[a]) grad[v] += g1;
      hess(0, 0) += g2;
      for (std::size_t v : coord_vars[a]) {
        hess(0, v) += g2;
        hess(v, 0) += g2;
        for (std::size_t w : coord_vars[a]) hess(v, w) += g2;
      }
    }

    for (std::size_t k = 0; k < p.circuits.size(); ++k) {
      const auto& supp = lay.circuit_support[k];
      const std::size_t off = lay.circuit_offset[k];
      const double g = geomean(k, z);
      const double w_slack = slack_term(k, z);

      for (std::size_t s = 0; s < supp.size(); ++s) {
        if (weights[k][s] <= 0) continue;
        const double x = z[off + s];
        grad[off + s] -= mu / x;
        hess(off + s, off + s) += mu / (x * x);
      }

      Eigen::VectorXd grad_w = Eigen::VectorXd::Zero(lay.size);
      grad_w[0] = -1;
      for (std::size_t s = 0; s < supp.size(); ++s) {
        const double w = weights[k][s];
        if (w > 0) {
          grad_w[off + s] = g * w / z[off + s];
        } else if (supp[s] == p.circuits[k].beta) {
          grad_w[off + s] = exp_sigma[k];
        }
      }
      grad -= (mu / w_slack) * grad_w;
      hess += (mu / (w_slack * w_slack)) * (grad_w * grad_w.transpose());
      // minus the (negative semidefinite) curvature of the geometric mean
      for (std::size_t s = 0; s < supp.size(); ++s) {
        const double ws = weights[k][s];
        if (ws <= 0) continue;
        const double xs = z[off + s];
        for (std::size_t u = 0; u < supp.size(); ++u) {
          const double wu = weights[k][u];
          if (wu <= 0) continue;
          const double xu = z[off + u];
          double d2 = g * ws * wu / (xs * xu);
          if (s == u) d2 -= g * ws / (xs * xs);
          hess(off + s, off + u) -= (mu / w_slack) * d2;
        }
      }
    }
  }
};

}  // namespace

MaxSlackSolution solve_max_slack(const MaxSlackProblem& p, double duality_stop) {
  const std::size_t m = p.target.size();
  const std::size_t num_circuits = p.circuits.size();
  if (num_circuits == 0) throw std::invalid_argument("no circuits to solve over");
  for (const auto& c : p.circuits)
    if (c.lambda.size() != m) throw std::invalid_argument("circuit size mismatch");

  // Normalize the coefficient scale so tolerances are meaningful.
  double scale = 1;
  for (double c : p.target) scale = std::max(scale, std::abs(c));
  std::vector<double> target_scaled(m);
  for (std::size_t a = 0; a < m; ++a) target_scaled[a] = p.target[a] / scale;

  const Layout lay = make_layout(p);
  Barrier barrier(p, lay, target_scaled);

  Eigen::VectorXd z = Eigen::VectorXd::Zero(lay.size);
  const double seed_mass = 5e-3 / static_cast<double>(num_circuits);
  for (std::size_t k = 0; k < num_circuits; ++k) {
    const auto& supp = lay.circuit_support[k];
    for (std::size_t s = 0; s < supp.size(); ++s)
      if (barrier.weights[k][s] > 0)
        z[lay.circuit_offset[k] + s] = seed_mass * barrier.weights[k][s];
  }
  {
    double lowest = 0;  // z[0] is still zero here
    for (std::size_t a = 0; a < m; ++a)
      lowest = std::min(lowest, barrier.residual_at(a, z));
    for (std::size_t k = 0; k < num_circuits; ++k)
      lowest = std::min(lowest, barrier.slack_term(k, z));
    z[0] = lowest - 1.0;
  }
  if (!barrier.strictly_feasible(z))
    throw std::logic_error("initial point infeasible");

  const std::size_t num_barrier_terms = [&] {
    std::size_t n = m + num_circuits;
    for (std::size_t k = 0; k < num_circuits; ++k)
      for (double w : barrier.weights[k])
        if (w > 0) ++n;
    return n;
  }();

  Eigen::VectorXd grad(lay.size);
  Eigen::MatrixXd hess(lay.size, lay.size);

  double mu = 1.0;
  bool converged = true;
  while (true) {
    for (int iter = 0; iter < 60; ++iter) {
      barrier.derivatives(z, mu, grad, hess);
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      Eigen::VectorXd dz = ldlt.solve(-grad);
      if (ldlt.info() != Eigen::Success || !dz.allFinite())
        dz = hess.fullPivLu().solve(-grad);

      const double decrement_sq = -grad.dot(dz);
      if (!(decrement_sq > 1e-11)) break;

      double step = 1.0;
      const double base = barrier.value(z, mu);
      while (step > 1e-14) {
        const Eigen::VectorXd trial = z + step * dz;
        if (barrier.strictly_feasible(trial) &&
            barrier.value(trial, mu) <= base - 1e-4 * step * decrement_sq)
          break;
        step *= 0.5;
      }
      if (step <= 1e-14) {
        converged = iter > 0;
        break;
      }
      z += step * dz;
    }
    if (mu * static_cast<double>(num_barrier_terms) <= duality_stop) break;
    mu /= 5.0;
  }

  MaxSlackSolution out;
  out.converged = converged;
  out.slack = z[0] * scale;
  out.term_coeffs.assign(num_circuits, std::vector<double>(m, 0.0));
  for (std::size_t k = 0; k < num_circuits; ++k) {
    const auto& supp = lay.circuit_support[k];
    for (std::size_t s = 0; s < supp.size(); ++s)
      out.term_coeffs[k][supp[s]] = z[lay.circuit_offset[k] + s] * scale;
  }
  out.residual.assign(m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    out.residual[a] = barrier.residual_at(a, z) * scale;
  return out;
}

}  // namespace sagecirc::detail
