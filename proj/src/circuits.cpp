#include "sagecirc/circuits.hpp"

#include <algorithm>
#include <stdexcept>

namespace sagecirc {

Support make_support(std::vector<RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("support must be nonempty");
  const std::size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("support dimension mismatch");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("support points must be distinct");
  return Support{std::move(points), n};
}

RationalMatrix support_operator(const Support& s) {
  RationalMatrix a(s.n, s.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < s.n; ++i) a.at(i, j) = s.points[j][i];
  return a;
}

RationalVector apply_support(const Support& s, const RationalVector& nu) {
  if (nu.size() != s.size()) throw std::invalid_argument("dimension mismatch");
  RationalVector y(s.n);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < s.n; ++i) y[i] += s.points[j][i] * nu[j];
  return y;
}

FunctionalForm functional_form(const Circuit& c) { return {c.lambda, c.sigma}; }

Rational evaluate_form(const FunctionalForm& f, const RationalVector& y) {
  return dot(f.first, y) + f.second;
}

void validate_support_against(const Support& s, const HPolyhedron& x) {
  if (x.dim != s.n) throw std::invalid_argument("support/X dimension mismatch");
  if (h_is_empty(x)) throw std::invalid_argument("X must be nonempty");

  // Direction space of aff(X): kernel of the implicit-equality rows.
  RationalMatrix eq(0, x.dim);
  for (std::size_t i = 0; i < x.A.rows(); ++i) {
    const LPResult lo = lp_maximize(x, negate(x.A.row(i)));
    if (lo.status == LPStatus::OPTIMAL && -*lo.value == x.b[i])
      eq.append_row(x.A.row(i));
  }
  const std::vector<RationalVector> directions = kernel_basis(eq);

  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const RationalVector diff = subtract(s.points[i], s.points[j]);
      bool orthogonal = true;
      for (const auto& d : directions) {
        if (dot(diff, d) != 0) {
          orthogonal = false;
          break;
        }
      }
      if (orthogonal)
        throw std::invalid_argument(
            "exponentials coincide on X for support points " +
            std::to_string(i) + " and " + std::to_string(j));
    }
  }
}

VPolyhedron build_p_polyhedron(const Support& s, const HPolyhedron& x,
                               std::size_t beta) {
  if (beta >= s.size()) throw std::invalid_argument("beta out of range");
  const VPolyhedron xv = dd_convert(x);
  if (xv.is_empty()) throw std::invalid_argument("X must be nonempty");

  const std::size_t m = s.size();
  RationalMatrix neg_adjoint(m, s.n);  // row alpha = -alpha^T
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < s.n; ++i) neg_adjoint.at(j, i) = -s.points[j][i];
  const VPolyhedron mapped = linear_image(neg_adjoint, xv);

  VPolyhedron sign_polar;  // polar of the sign cone at beta
  sign_polar.dim = m;
  sign_polar.vertices.push_back(zero_vector(m));
  for (std::size_t j = 0; j < m; ++j)
    if (j != beta) sign_polar.rays.push_back(negate(unit_vector(m, j)));
  sign_polar.lineality.push_back(ones_vector(m));

  return minkowski_sum(mapped, sign_polar);
}

void check_circuit_invariants(const Support& s, const Circuit& c) {
  const std::size_t m = s.size();
  if (c.lambda.size() != m || c.beta >= m)
    throw std::logic_error("circuit shape mismatch");
  if (c.lambda[c.beta] != -1)
    throw std::logic_error("circuit not normalized at beta");
  Rational sum = 0;
  std::size_t support_size = 0;
  std::vector<RationalVector> positive_points;
  for (std::size_t j = 0; j < m; ++j) {
    sum += c.lambda[j];
    if (c.lambda[j] != 0) ++support_size;
    if (j == c.beta) continue;
    if (c.lambda[j] < 0) throw std::logic_error("negative entry off beta");
    if (c.lambda[j] > 0) positive_points.push_back(s.points[j]);
  }
  if (sum != 0) throw std::logic_error("circuit entries must sum to zero");
  if (!affinely_independent(positive_points))
    throw std::logic_error("positive support not affinely independent");
  if (support_size > s.n + 2)
    throw std::logic_error("circuit support exceeds n+2");
}

std::vector<Circuit> enumerate_circuits(const Support& s, const HPolyhedron& x,
                                        std::size_t beta) {
  validate_support_against(s, x);
  const VPolyhedron p = build_p_polyhedron(s, x, beta);
  const HPolyhedron facets = dd_convert(p);

  std::vector<Circuit> circuits;
  for (std::size_t i = 0; i < facets.A.rows(); ++i) {
    const RationalVector w = facets.A.row(i);
    // rec(P) contains the polar sign cone, so every facet normal carries the
    // sign pattern of the beta orthant; w_beta = 0 would force w = 0.
    if (w[beta] >= 0) throw std::logic_error("facet normal outside sign cone");
    const Rational scale_inv = -w[beta];
    Circuit c;
    c.lambda = scale(w, Rational(1) / scale_inv);
    c.beta = beta;
    c.sigma = facets.b[i] / scale_inv;

    const LPResult lp = lp_maximize(x, negate(apply_support(s, c.lambda)));
    if (lp.status != LPStatus::OPTIMAL)
      throw std::logic_error("support function not finite at facet normal");
    if (*lp.value != c.sigma)
      throw std::logic_error("facet offset disagrees with support function");

    check_circuit_invariants(s, c);
    circuits.push_back(std::move(c));
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              return lex_less(a.lambda, b.lambda);
            });
  return circuits;
}

std::vector<Circuit> enumerate_circuits(const Support& s, const HPolyhedron& x) {
  std::vector<Circuit> all;
  for (std::size_t beta = 0; beta < s.size(); ++beta) {
    const std::vector<Circuit> part = enumerate_circuits(s, x, beta);
    for (const auto& c : part) {
      // beta is determined by the sign pattern, so cross-beta duplicates
      // cannot occur.
      for (const auto& seen : all)
        if (seen.lambda == c.lambda)
          throw std::logic_error("duplicate circuit across beta");
      all.push_back(c);
    }
  }
  return all;  // already ordered by (beta, lex lambda)
}

std::vector<Circuit> conic_circuits(const Support& s, const VPolyhedron& x_cone,
                                    std::size_t beta) {
  if (!x_cone.is_cone()) throw std::invalid_argument("input not a cone");
  if (beta >= s.size()) throw std::invalid_argument("beta out of range");
  const std::size_t m = s.size();

  // { nu : nu >= 0 off beta, 1^T nu = 0, A nu in X_dual }, with the dual-cone
  // membership written against the generators of X.
  RationalMatrix rows(0, m);
  for (std::size_t j = 0; j < m; ++j)
    if (j != beta) rows.append_row(negate(unit_vector(m, j)));
  rows.append_row(ones_vector(m));
  rows.append_row(negate(ones_vector(m)));
  const auto add_generator = [&](const RationalVector& g) {
    RationalVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = -dot(g, s.points[j]);
    rows.append_row(row);
  };
  for (const auto& r : x_cone.rays) add_generator(r);
  for (const auto& l : x_cone.lineality) {
    add_generator(l);
    add_generator(negate(l));
  }

  const ConeGenerators gen = cone_dual_description(rows, m);
  if (!gen.lineality.empty())
    throw std::logic_error("sign cone slice cannot contain lines");

  std::vector<Circuit> circuits;
  for (const auto& ray : gen.rays) {
    if (ray[beta] >= 0) throw std::logic_error("ray outside sign cone");
    Circuit c;
    c.lambda = scale(ray, Rational(1) / -ray[beta]);
    c.beta = beta;
    c.sigma = 0;
    check_circuit_invariants(s, c);
    circuits.push_back(std::move(c));
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              return lex_less(a.lambda, b.lambda);
            });
  return circuits;
}

bool is_circuit(const Support& s, const HPolyhedron& x, const RationalVector& nu) {
  if (nu.size() != s.size()) throw std::invalid_argument("dimension mismatch");
  if (is_zero(nu)) return false;
  std::size_t negatives = 0;
  std::size_t beta = 0;
  Rational sum = 0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    sum += nu[j];
    if (nu[j] < 0) {
      ++negatives;
      beta = j;
    }
  }
  if (negatives != 1 || sum != 0) return false;

  const RationalVector lambda = scale(nu, Rational(1) / -nu[beta]);
  for (const auto& c : enumerate_circuits(s, x, beta))
    if (c.lambda == lambda) return true;
  return false;
}

}  // namespace sagecirc
