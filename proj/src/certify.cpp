#include "sagecirc/certify.hpp"

#include "barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sagecirc {

namespace {

double coeff_scale(const std::vector<double>& c) {
  double s = 1;
  for (double x : c) s = std::max(s, std::abs(x));
  return s;
}

// Exact dyadic rounding to the 2^-48 grid.
Rational grid_round(double x) {
  static const Integer grid = Integer(1) << 48;
  const Rational exact(x);
  const Rational scaled = exact * Rational(grid);
  const Integer num = numerator(scaled);
  const Integer den = denominator(scaled);
  Integer rounded = num / den;
  const Integer rem = num - rounded * den;
  if (2 * abs(rem) >= den) rounded += (num < 0 ? -1 : 1);
  return Rational(rounded, grid);
}

std::vector<std::size_t> positive_support(const Circuit& lam) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < lam.lambda.size(); ++j)
    if (lam.lambda[j] > 0) idx.push_back(j);
  return idx;
}

double log_geomean(const std::vector<double>& coeffs, const Circuit& lam) {
  double acc = 0;
  for (std::size_t j : positive_support(lam)) {
    const double w = static_cast<double>(lam.lambda[j]);
    if (coeffs[j] <= 0) return -std::numeric_limits<double>::infinity();
    acc += w * (std::log(coeffs[j]) - std::log(w));
  }
  return acc;
}

}  // namespace

double age_log_violation(const std::vector<double>& coeffs, const Circuit& lam) {
  const double c_beta = coeffs[lam.beta];
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (j != lam.beta && coeffs[j] < 0)
      return std::numeric_limits<double>::infinity();
  if (c_beta >= 0) return 0;
  const double lhs = log_geomean(coeffs, lam);
  const double rhs = std::log(-c_beta) + static_cast<double>(lam.sigma);
  return std::max(0.0, rhs - lhs);
}

bool lambda_age_check(const Signomial& f, const Circuit& lam,
                      const CertifyOptions& opts) {
  if (f.support.size() != lam.lambda.size())
    throw std::invalid_argument("support mismatch");
  if (f.is_rational()) {
    for (std::size_t j = 0; j < f.support.size(); ++j)
      if (j != lam.beta && (*f.exact_coeffs)[j] < 0) return false;
    if ((*f.exact_coeffs)[lam.beta] >= 0) return true;
  }
  return age_log_violation(f.coeffs, lam) <= opts.tol;
}

bool check_relent_certificate(const Signomial& f, const AGEWitness& w,
                              const HPolyhedron& x, const CertifyOptions& opts) {
  const std::size_t m = f.support.size();
  if (w.nu.size() != m) throw std::invalid_argument("witness length mismatch");
  for (std::size_t j = 0; j < m; ++j)
    if (j != w.beta && f.coeffs[j] < 0)
      throw std::invalid_argument("coefficients off beta must be nonnegative");

  RationalVector nu(m);
  if (w.nu_exact) {
    nu = *w.nu_exact;
  } else {
    for (std::size_t j = 0; j < m; ++j) nu[j] = Rational(w.nu[j]);  // exact
  }
  if (is_zero(nu)) return false;

  double nu_scale = 0;
  for (double v : w.nu) nu_scale = std::max(nu_scale, std::abs(v));
  Rational sum = 0;
  for (const auto& v : nu) sum += v;
  if (std::abs(static_cast<double>(sum)) > opts.tol * std::max(1.0, nu_scale))
    return false;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == w.beta) continue;
    if (static_cast<double>(nu[j]) < -opts.tol * std::max(1.0, nu_scale))
      return false;
  }

  const LPResult sigma = lp_maximize(x, negate(apply_support(f.support, nu)));
  if (sigma.status != LPStatus::OPTIMAL) return false;  // support value infinite

  // D(nu off beta, e c off beta) = sum nu_j (log(nu_j / c_j) - 1).
  double relent = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == w.beta) continue;
    const double nj = static_cast<double>(nu[j]);
    if (nj <= 0) continue;  // 0 log 0 = 0, tiny negatives already screened
    if (f.coeffs[j] <= 0) return false;
    relent += nj * (std::log(nj / f.coeffs[j]) - 1);
  }
  const double lhs = static_cast<double>(*sigma.value) + relent;
  return lhs <= f.coeffs[w.beta] + opts.tol * coeff_scale(f.coeffs);
}

AGEWitness witness_from_circuit(const Signomial& f, const Circuit& lam) {
  if (f.support.size() != lam.lambda.size())
    throw std::invalid_argument("support mismatch");
  AGEWitness w;
  w.beta = lam.beta;
  if (f.is_rational()) {
    const Rational c_beta = (*f.exact_coeffs)[lam.beta];
    if (c_beta >= 0)
      throw std::invalid_argument("witness conversion needs c_beta < 0");
    RationalVector nu = scale(lam.lambda, -c_beta);
    w.nu.reserve(nu.size());
    for (const auto& v : nu) w.nu.push_back(static_cast<double>(v));
    w.nu_exact = std::move(nu);
  } else {
    const double c_beta = f.coeffs[lam.beta];
    if (c_beta >= 0)
      throw std::invalid_argument("witness conversion needs c_beta < 0");
    for (const auto& l : lam.lambda)
      w.nu.push_back(-c_beta * static_cast<double>(l));
  }
  return w;
}

std::pair<std::vector<double>, double> witness_direction(const AGEWitness& w) {
  if (w.nu.empty()) throw std::invalid_argument("empty witness");
  std::size_t beta = 0;
  for (std::size_t j = 1; j < w.nu.size(); ++j)
    if (w.nu[j] < w.nu[beta]) beta = j;
  if (w.nu[beta] >= 0)
    throw std::invalid_argument("witness has no negative entry");
  const double s = -w.nu[beta];
  std::vector<double> lambda(w.nu.size());
  for (std::size_t j = 0; j < w.nu.size(); ++j) lambda[j] = w.nu[j] / s;
  return {lambda, s};
}

bool power_cone_member(const PowerConeSpec& spec, const std::vector<double>& z,
                       double tol) {
  const Circuit& lam = spec.lambda;
  if (z.size() != lam.lambda.size())
    throw std::invalid_argument("dimension mismatch");
  double lhs_log = 0;
  bool zero_factor = false;
  for (std::size_t j : positive_support(lam)) {
    if (z[j] < 0) return false;
    if (z[j] == 0) {
      zero_factor = true;
      continue;
    }
    const double w = static_cast<double>(lam.lambda[j]);
    lhs_log += spec.side == PowerConeSide::PRIMAL
                   ? w * std::log(z[j])
                   : w * (std::log(z[j]) - std::log(w));
  }
  const double rhs = std::abs(z[lam.beta]);
  if (zero_factor) return rhs <= tol;
  if (rhs == 0) return true;
  return lhs_log >= std::log(rhs) - tol;
}

bool dual_membership_check(const std::vector<double>& v, const ReducedSet& r,
                           const CertifyOptions& opts) {
  for (double x : v)
    if (x < 0) throw std::invalid_argument("dual vector must be nonnegative");
  for (const auto& c : r.circuits) {
    if (c.lambda.size() != v.size())
      throw std::invalid_argument("dimension mismatch");
    const double v_beta = v[c.beta];
    bool zero_factor = false;
    double lhs = static_cast<double>(c.sigma);
    for (std::size_t j : positive_support(c)) {
      if (v[j] == 0) {
        zero_factor = true;
        break;
      }
      lhs += static_cast<double>(c.lambda[j]) * std::log(v[j]);
    }
    if (zero_factor) {
      if (v_beta > 0) return false;  // product collapses to zero
      continue;
    }
    if (v_beta == 0) continue;
    if (lhs < std::log(v_beta) - opts.tol) return false;
  }
  return true;
}

namespace {

bool exact_nonnegative(const Signomial& f) {
  if (!f.is_rational()) return false;
  for (const auto& c : *f.exact_coeffs)
    if (c < 0) return false;
  return true;
}

bool float_nonnegative(const Signomial& f) {
  for (double c : f.coeffs)
    if (c < 0) return false;
  return true;
}

double min_coeff(const std::vector<double>& c) {
  double lo = std::numeric_limits<double>::infinity();
  for (double x : c) lo = std::min(lo, x);
  return lo;
}

// Alternating polish: pull every term's beta entry onto the AM/GM boundary,
// then push coordinate mismatches back into the positive entries. Contracts
// quickly because each rebalance perturbs the geometric means by a factor
// proportional to the adjustment.
void polish_decomposition(std::vector<Circuit>& circuits,
                          const std::vector<double>& target,
                          std::vector<std::vector<double>>& terms,
                          std::vector<double>& residual) {
  const std::size_t m = target.size();
  double term_scale = 1e-12;
  for (double c : target) term_scale = std::max(term_scale, 1e-12 * std::abs(c));
  for (int round = 0; round < 4; ++round) {
    for (int pass = 0; pass < 200; ++pass) {
      double shift = 0;
      for (std::size_t k = 0; k < circuits.size(); ++k) {
        const double tight =
            -std::exp(log_geomean(terms[k], circuits[k]) -
                      static_cast<double>(circuits[k].sigma));
        shift = std::max(shift, std::abs(terms[k][circuits[k].beta] - tight));
        terms[k][circuits[k].beta] = tight;
      }
      for (std::size_t a = 0; a < m; ++a) {
        double total = 0;
        for (const auto& t : terms) total += t[a];
        residual[a] = target[a] - total;
        // Shave any deficit off positive entries, largest first, never
        // pushing an entry below zero.
        while (residual[a] < 0) {
          std::size_t best = circuits.size();
          for (std::size_t k = 0; k < circuits.size(); ++k) {
            if (circuits[k].lambda[a] <= 0 || terms[k][a] <= 0) continue;
            if (best == circuits.size() || terms[k][a] > terms[best][a])
              best = k;
          }
          if (best == circuits.size()) break;  // only beta entries touch it
          const double give = std::min(terms[best][a], -residual[a]);
          terms[best][a] -= give;
          residual[a] += give;
          shift = std::max(shift, give);
          if (give == 0) break;
        }
      }
      if (shift < 1e-15) break;
    }
    // Terms squeezed to numerical zero carry no certificate content; remove
    // them and re-balance once more.
    std::vector<std::size_t> dead;
    for (std::size_t k = 0; k < circuits.size(); ++k) {
      double mass = 0;
      for (double x : terms[k]) mass = std::max(mass, std::abs(x));
      if (mass <= term_scale) dead.push_back(k);
    }
    if (dead.empty()) break;
    for (std::size_t d = dead.size(); d-- > 0;) {
      circuits.erase(circuits.begin() + dead[d]);
      terms.erase(terms.begin() + dead[d]);
    }
    for (std::size_t a = 0; a < m; ++a) {
      double total = 0;
      for (const auto& t : terms) total += t[a];
      residual[a] = target[a] - total;
    }
  }
}

MembershipResult posynomial_member(const Signomial& f) {
  MembershipResult res;
  res.status = MembershipStatus::MEMBER;
  res.slack = min_coeff(f.coeffs);
  SageDecomposition dec;
  dec.residual = f.coeffs;
  if (f.is_rational()) dec.exact_residual = *f.exact_coeffs;
  res.decomposition = std::move(dec);
  return res;
}

}  // namespace

MembershipResult sage_membership(const Signomial& f, const ReducedSet& r,
                                 const CertifyOptions& opts) {
  const std::size_t m = f.support.size();
  for (const auto& c : r.circuits)
    if (c.lambda.size() != m)
      throw std::invalid_argument("reduced set does not match support");
  bool all_zero = true;
  for (double c : f.coeffs) all_zero = all_zero && c == 0;
  if (all_zero) throw std::invalid_argument("zero signomial");

  // Posynomials are members by definition; this also covers an empty
  // reduced set, where the cone is exactly the nonnegative orthant.
  if (exact_nonnegative(f) || (!f.is_rational() && float_nonnegative(f)))
    return posynomial_member(f);
  if (r.circuits.empty()) {
    MembershipResult res;
    res.status = MembershipStatus::NOT_MEMBER;
    res.slack = min_coeff(f.coeffs);
    return res;
  }

  detail::MaxSlackProblem prob{r.circuits, f.coeffs};
  const detail::MaxSlackSolution sol = detail::solve_max_slack(prob);
  const double scale = coeff_scale(f.coeffs);
  const double threshold = opts.tol * scale;

  MembershipResult res;
  res.slack = sol.slack;
  if (sol.slack < -threshold) {
    res.status =
        sol.converged ? MembershipStatus::NOT_MEMBER : MembershipStatus::INCONCLUSIVE;
    return res;
  }

  // Drop numerically idle terms (the barrier parks them at a scale set by
  // the final centering weight), then polish the survivors back onto the
  // constraint surface before verifying.
  std::vector<Circuit> kept_circuits;
  std::vector<std::vector<double>> kept_coeffs;
  for (std::size_t k = 0; k < r.circuits.size(); ++k) {
    double mass = 0;
    for (double x : sol.term_coeffs[k]) mass = std::max(mass, std::abs(x));
    if (mass > 1e-4 * scale) {
      kept_circuits.push_back(r.circuits[k]);
      kept_coeffs.push_back(sol.term_coeffs[k]);
    }
  }
  std::vector<double> residual = f.coeffs;
  polish_decomposition(kept_circuits, f.coeffs, kept_coeffs, residual);

  SageDecomposition dec;
  for (std::size_t k = 0; k < kept_circuits.size(); ++k)
    dec.terms.push_back(DecompositionTerm{kept_circuits[k], kept_coeffs[k], {}});
  dec.residual = residual;

  bool verified = true;
  for (const auto& term : dec.terms)
    if (age_log_violation(term.coeffs, term.circuit) > opts.tol) verified = false;
  for (double x : residual)
    if (x < -threshold) verified = false;

  if (verified) {
    res.status = MembershipStatus::MEMBER;
    res.decomposition = std::move(dec);
  } else {
    res.status = MembershipStatus::INCONCLUSIVE;
  }
  return res;
}

SageDecomposition refine_certificate(const Signomial& f,
                                     const std::vector<Circuit>& circuits,
                                     const std::vector<AGEWitness>& approx,
                                     const CertifyOptions& opts) {
  if (circuits.empty()) throw std::invalid_argument("no circuits to snap onto");
  const std::size_t m = f.support.size();

  std::vector<Circuit> snapped;
  for (const auto& w : approx) {
    const auto [dir, scale_w] = witness_direction(w);
    (void)scale_w;
    double best_dist = std::numeric_limits<double>::infinity();
    const Circuit* best = nullptr;
    for (const auto& c : circuits) {
      double dist = 0;
      for (std::size_t j = 0; j < m; ++j)
        dist = std::max(dist,
                        std::abs(dir[j] - static_cast<double>(c.lambda[j])));
      if (dist < best_dist) {
        best_dist = dist;
        best = &c;
      }
    }
    if (best == nullptr || best_dist > opts.snap_radius)
      throw std::invalid_argument("no circuit within snap radius of witness");
    if (std::none_of(snapped.begin(), snapped.end(), [&](const Circuit& c) {
          return c.lambda == best->lambda;
        }))
      snapped.push_back(*best);
  }
  std::sort(snapped.begin(), snapped.end(), [](const Circuit& a, const Circuit& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return lex_less(a.lambda, b.lambda);
  });

  detail::MaxSlackProblem prob{snapped, f.coeffs};
  const detail::MaxSlackSolution sol = detail::solve_max_slack(prob, 1e-11);
  const double scale = coeff_scale(f.coeffs);
  if (sol.slack < -1e2 * opts.tol * scale)
    throw std::runtime_error("fixed-circuit program infeasible");

  std::vector<std::vector<double>> terms = sol.term_coeffs;
  std::vector<double> residual = sol.residual;
  polish_decomposition(snapped, f.coeffs, terms, residual);

  SageDecomposition dec;
  if (f.is_rational()) {
    // Exact assembly: positive entries and the residual live on a dyadic
    // grid; each term's beta entry absorbs its coordinate exactly, so the
    // reconstruction identity holds in rational arithmetic.
    std::vector<RationalVector> exact_terms(snapped.size(),
                                            zero_vector(m));
    RationalVector exact_residual = *f.exact_coeffs;
    for (std::size_t k = 0; k < snapped.size(); ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        if (snapped[k].lambda[j] > 0) {
          Rational v = grid_round(terms[k][j]);
          if (v <= 0) v = Rational(1, Integer(1) << 48);
          exact_terms[k][j] = v;
          exact_residual[j] -= v;
        }
      }
    }
    // Coordinates without an absorbing beta entry: keep the residual
    // nonnegative by shaving positive entries.
    std::vector<std::vector<std::size_t>> beta_terms(m);
    for (std::size_t k = 0; k < snapped.size(); ++k)
      beta_terms[snapped[k].beta].push_back(k);
    for (std::size_t a = 0; a < m; ++a) {
      if (!beta_terms[a].empty()) continue;
      if (exact_residual[a] >= 0) continue;
      for (std::size_t k = 0; k < snapped.size() && exact_residual[a] < 0; ++k) {
        if (snapped[k].lambda[a] <= 0) continue;
        const Rational deficit = -exact_residual[a];
        const Rational give = std::min(exact_terms[k][a], deficit);
        exact_terms[k][a] -= give;
        exact_residual[a] += give;
      }
      if (exact_residual[a] < 0)
        throw std::runtime_error("fixed-circuit program infeasible");
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (beta_terms[a].empty()) continue;
      // Reserve a nonnegative residual share, then let the beta entries
      // absorb the exact remainder.
      Rational share = exact_residual[a];
      RationalVector absorbed(beta_terms[a].size());
      for (std::size_t i = 1; i < beta_terms[a].size(); ++i) {
        const std::size_t k = beta_terms[a][i];
        absorbed[i] = grid_round(terms[k][a]);
        share -= absorbed[i];
      }
      Rational rho = grid_round(std::max(residual[a], 0.0));
      if (rho < 0) rho = 0;
      absorbed[0] = share - rho;
      exact_residual[a] = rho;
      for (std::size_t i = 0; i < beta_terms[a].size(); ++i)
        exact_terms[beta_terms[a][i]][a] = absorbed[i];
    }

    for (std::size_t k = 0; k < snapped.size(); ++k) {
      DecompositionTerm term;
      term.circuit = snapped[k];
      term.coeffs.resize(m);
      for (std::size_t j = 0; j < m; ++j)
        term.coeffs[j] = static_cast<double>(exact_terms[k][j]);
      term.exact_coeffs = std::move(exact_terms[k]);
      dec.terms.push_back(std::move(term));
    }
    dec.residual.resize(m);
    for (std::size_t a = 0; a < m; ++a)
      dec.residual[a] = static_cast<double>(exact_residual[a]);
    dec.exact_residual = std::move(exact_residual);
  } else {
    for (std::size_t k = 0; k < snapped.size(); ++k) {
      DecompositionTerm term;
      term.circuit = snapped[k];
      term.coeffs = terms[k];
      dec.terms.push_back(std::move(term));
    }
    for (auto& x : residual) x = std::max(x, 0.0);
    dec.residual = residual;
  }

  for (const auto& term : dec.terms) {
    if (age_log_violation(term.coeffs, term.circuit) > opts.tol / 10)
      throw std::runtime_error("refined term failed verification");
  }
  return dec;
}

}  // namespace sagecirc
