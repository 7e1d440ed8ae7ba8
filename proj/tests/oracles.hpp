#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here is deliberately naive and kept separate from the library
// code paths it cross-checks.

#include "sagecirc/circuits.hpp"

#include <algorithm>
#include <vector>

namespace sagecirc::oracle {

// Simplicial circuits of the affine-linear matroid of the support: for every
// beta and every affinely independent subset S of the remaining points, solve
// for the unique vector with A nu = 0, 1^T nu = 0, nu_beta = -1 supported on
// S + beta, and keep it when all entries over S are strictly positive.
inline std::vector<Circuit> brute_force_free_circuits(const Support& s) {
  const std::size_t m = s.size();
  std::vector<Circuit> found;

  for (std::size_t beta = 0; beta < m; ++beta) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != beta) others.push_back(j);

    for (std::size_t mask = 1; mask < (std::size_t(1) << others.size()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t bit = 0; bit < others.size(); ++bit)
        if (mask & (std::size_t(1) << bit)) subset.push_back(others[bit]);

      std::vector<RationalVector> pts;
      for (std::size_t j : subset) pts.push_back(s.points[j]);
      if (!affinely_independent(pts)) continue;

      // Columns (alpha_j, 1) for j in subset; rhs (beta point, 1).
      RationalMatrix sys(s.n + 1, subset.size());
      for (std::size_t col = 0; col < subset.size(); ++col) {
        for (std::size_t i = 0; i < s.n; ++i)
          sys.at(i, col) = s.points[subset[col]][i];
        sys.at(s.n, col) = 1;
      }
      RationalVector rhs(s.n + 1);
      for (std::size_t i = 0; i < s.n; ++i) rhs[i] = s.points[beta][i];
      rhs[s.n] = 1;

      const auto sol = solve_unique(sys, rhs);
      if (!sol) continue;
      bool strictly_positive = true;
      for (const auto& x : *sol)
        if (x <= 0) strictly_positive = false;
      if (!strictly_positive) continue;

      Circuit c;
      c.lambda = zero_vector(m);
      c.lambda[beta] = -1;
      for (std::size_t col = 0; col < subset.size(); ++col)
        c.lambda[subset[col]] = (*sol)[col];
      c.beta = beta;
      c.sigma = 0;
      if (std::none_of(found.begin(), found.end(), [&](const Circuit& d) {
            return d.lambda == c.lambda;
          }))
        found.push_back(std::move(c));
    }
  }

  std::sort(found.begin(), found.end(), [](const Circuit& a, const Circuit& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return lex_less(a.lambda, b.lambda);
  });
  return found;
}

// Definition-route oracle for polyhedral X: lift to the epigraph cone
//   E = { (nu, t) : nu in the sign cone at beta,
//         (-A^T v) . nu <= t for every vertex v of X,
//         (-A^T r) . nu <= 0 for every ray r,
//         (-A^T l) . nu  = 0 for every line l },
// whose non-vertical edge generators are exactly the lifted circuits. This
// shares no code path with the facet-normal enumeration it cross-checks
// beyond the raw cone conversion.
inline std::vector<Circuit> epigraph_circuits(const Support& s,
                                              const HPolyhedron& x,
                                              std::size_t beta) {
  const std::size_t m = s.size();
  const VPolyhedron xv = dd_convert(x);
  if (xv.is_empty()) throw std::invalid_argument("empty domain");

  RationalMatrix rows(0, m + 1);
  const auto mapped = [&](const RationalVector& g) {
    RationalVector row(m + 1);
    for (std::size_t j = 0; j < m; ++j) row[j] = -dot(g, s.points[j]);
    return row;
  };
  for (std::size_t j = 0; j < m; ++j) {
    if (j == beta) continue;
    RationalVector row(m + 1);
    row[j] = -1;
    rows.append_row(row);
  }
  {
    RationalVector ones(m + 1, Rational(1));
    ones[m] = 0;
    rows.append_row(ones);
    rows.append_row(negate(ones));
  }
  for (const auto& v : xv.vertices) {
    RationalVector row = mapped(v);
    row[m] = -1;  // sigma epigraph: value <= t
    rows.append_row(row);
  }
  for (const auto& r : xv.rays) rows.append_row(mapped(r));
  for (const auto& l : xv.lineality) {
    rows.append_row(mapped(l));
    rows.append_row(negate(mapped(l)));
  }

  std::vector<Circuit> out;
  const ConeGenerators gen = cone_dual_description(rows, m + 1);
  for (const auto& ray : gen.rays) {
    const RationalVector nu(ray.begin(), ray.end() - 1);
    if (is_zero(nu)) continue;  // the vertical epigraph direction
    Circuit c;
    c.lambda = scale(nu, Rational(1) / -nu[beta]);
    c.beta = beta;
    c.sigma = ray[m] / -nu[beta];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    return lex_less(a.lambda, b.lambda);
  });
  return out;
}

inline bool same_circuits(const std::vector<Circuit>& a,
                          const std::vector<Circuit>& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const Circuit& c) { return std::pair(c.lambda, c.sigma); };
  std::vector<std::pair<RationalVector, Rational>> ka, kb;
  for (const auto& c : a) ka.push_back(key(c));
  for (const auto& c : b) kb.push_back(key(c));
  auto cmp = [](const auto& x, const auto& y) {
    if (x.first != y.first) return lex_less(x.first, y.first);
    return x.second < y.second;
  };
  std::sort(ka.begin(), ka.end(), cmp);
  std::sort(kb.begin(), kb.end(), cmp);
  return ka == kb;
}

}  // namespace sagecirc::oracle
