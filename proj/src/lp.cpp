#include "sagecirc/lp.hpp"

#include <limits>
#include <stdexcept>

namespace sagecirc {

namespace {

// Dense simplex working state: tableau holds B^{-1}[A | b] throughout, so
// reduced costs for any cost vector are recomputed from scratch each
// iteration. Quadratic per pivot, which is fine at the problem sizes the
// toolkit targets.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural columns, rhs kept separately
  std::vector<RationalVector> t;
  RationalVector rhs;
  std::vector<std::size_t> basis;

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / t[pr][pc];
    for (auto& x : t[pr]) x *= inv;
    rhs[pr] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      const Rational f = t[i][pc];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    basis[pr] = pc;
  }
};

enum class PhaseOutcome { OPTIMAL, UNBOUNDED };

// Bland's rule: entering = lowest-index column with negative reduced cost,
// leaving = lowest basis index among minimum-ratio rows.
PhaseOutcome run_simplex(Tableau& tab, const RationalVector& cost,
                         const std::vector<bool>& allowed) {
  while (true) {
    RationalVector cb(tab.rows);
    for (std::size_t i = 0; i < tab.rows; ++i) cb[i] = cost[tab.basis[i]];

    std::size_t entering = tab.cols;
    for (std::size_t j = 0; j < tab.cols; ++j) {
      if (!allowed[j]) continue;
      Rational red = cost[j];
      for (std::size_t i = 0; i < tab.rows; ++i) red -= cb[i] * tab.t[i][j];
      if (red < 0) {
        entering = j;
        break;
      }
    }
    if (entering == tab.cols) return PhaseOutcome::OPTIMAL;

    std::size_t leaving = tab.rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < tab.rows; ++i) {
      if (tab.t[i][entering] <= 0) continue;
      const Rational ratio = tab.rhs[i] / tab.t[i][entering];
      if (leaving == tab.rows || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == tab.rows) return PhaseOutcome::UNBOUNDED;
    tab.pivot(leaving, entering);
  }
}

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (!lp.objective.empty() && lp.objective.size() != n)
    throw std::invalid_argument("objective length mismatch");
  if (!lp.nonneg.empty() && lp.nonneg.size() != n)
    throw std::invalid_argument("nonneg flags length mismatch");
  if (lp.eq_lhs.rows() != lp.eq_rhs.size() ||
      lp.ineq_lhs.rows() != lp.ineq_rhs.size())
    throw std::invalid_argument("rhs length mismatch");
  if ((lp.eq_lhs.rows() > 0 && lp.eq_lhs.cols() != n) ||
      (lp.ineq_lhs.rows() > 0 && lp.ineq_lhs.cols() != n))
    throw std::invalid_argument("lhs width mismatch");

  const auto var_nonneg = [&](std::size_t j) {
    return lp.nonneg.empty() ? false : bool(lp.nonneg[j]);
  };

  // Standard-form columns: x_j for nonnegative variables, split pairs
  // (x_j^+, x_j^-) for free ones, then one slack per inequality, then one
  // artificial per row.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = next++;
    if (!var_nonneg(j)) neg_col[j] = next++;
  }
  const std::size_t num_rows = lp.eq_lhs.rows() + lp.ineq_lhs.rows();
  const std::size_t slack0 = next;
  next += lp.ineq_lhs.rows();
  const std::size_t art0 = next;
  next += num_rows;
  const std::size_t total_cols = next;

  Tableau tab;
  tab.rows = num_rows;
  tab.cols = total_cols;
  tab.t.assign(num_rows, RationalVector(total_cols));
  tab.rhs.assign(num_rows, Rational(0));
  tab.basis.assign(num_rows, 0);

  const auto fill_row = [&](std::size_t r, const RationalVector& coeffs,
                            const Rational& rhs_val, std::size_t slack) {
    const bool flip = rhs_val < 0;
    const Rational s = flip ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      tab.t[r][pos_col[j]] = s * coeffs[j];
      if (neg_col[j] != SIZE_MAX) tab.t[r][neg_col[j]] = -s * coeffs[j];
    }
    if (slack != SIZE_MAX) tab.t[r][slack] = s;
    tab.t[r][art0 + r] = 1;
    tab.rhs[r] = s * rhs_val;
    tab.basis[r] = art0 + r;
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < lp.eq_lhs.rows(); ++i, ++r)
    fill_row(r, lp.eq_lhs.row(i), lp.eq_rhs[i], SIZE_MAX);
  for (std::size_t i = 0; i < lp.ineq_lhs.rows(); ++i, ++r)
    fill_row(r, lp.ineq_lhs.row(i), lp.ineq_rhs[i], slack0 + i);

  // Phase I: minimize the sum of artificials.
  {
    RationalVector art_cost(total_cols, Rational(0));
    for (std::size_t j = art0; j < total_cols; ++j) art_cost[j] = 1;
    std::vector<bool> allowed(total_cols, true);
    run_simplex(tab, art_cost, allowed);  // bounded below by 0

    Rational infeas = 0;
    for (std::size_t i = 0; i < tab.rows; ++i)
      if (tab.basis[i] >= art0) infeas += tab.rhs[i];
    if (infeas > 0) return {LPStatus::INFEASIBLE, Rational(0), {}};

    // Degenerate artificials still in the basis: pivot them out on any
    // structural column, or drop the row as redundant.
    for (std::size_t i = 0; i < tab.rows; ++i) {
      if (tab.basis[i] < art0) continue;
      std::size_t pc = art0;
      for (std::size_t j = 0; j < art0; ++j) {
        if (tab.t[i][j] != 0) {
          pc = j;
          break;
        }
      }
      if (pc < art0) {
        tab.pivot(i, pc);
      } else {
        tab.t.erase(tab.t.begin() + i);
        tab.rhs.erase(tab.rhs.begin() + i);
        tab.basis.erase(tab.basis.begin() + i);
        --tab.rows;
        --i;
      }
    }
  }

  // Phase II on the original objective, artificials locked out.
  RationalVector cost(total_cols, Rational(0));
  if (!lp.objective.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[pos_col[j]] = lp.objective[j];
      if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -lp.objective[j];
    }
  }
  std::vector<bool> allowed(total_cols, true);
  for (std::size_t j = art0; j < total_cols; ++j) allowed[j] = false;
  if (run_simplex(tab, cost, allowed) == PhaseOutcome::UNBOUNDED)
    return {LPStatus::UNBOUNDED, Rational(0), {}};

  RationalVector full(total_cols, Rational(0));
  for (std::size_t i = 0; i < tab.rows; ++i) full[tab.basis[i]] = tab.rhs[i];
  RationalVector point(n);
  Rational value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    point[j] = full[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) point[j] -= full[neg_col[j]];
    if (!lp.objective.empty()) value += lp.objective[j] * point[j];
  }
  return {LPStatus::OPTIMAL, value, point};
}

}  // namespace sagecirc
