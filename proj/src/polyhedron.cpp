#include "sagecirc/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace sagecirc {

namespace {

void sort_lex(std::vector<RationalVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
}

void dedupe_sorted(std::vector<RationalVector>& vs) {
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

HPolyhedron HPolyhedron::whole_space(std::size_t dim) {
  HPolyhedron h;
  h.A = RationalMatrix(0, dim);
  h.dim = dim;
  return h;
}

HPolyhedron HPolyhedron::empty(std::size_t dim) {
  HPolyhedron h;
  h.A = RationalMatrix(1, dim);
  h.b = {Rational(-1)};
  h.dim = dim;
  return h;
}

bool VPolyhedron::is_cone() const {
  if (vertices.empty()) return false;
  for (const auto& v : vertices)
    if (!is_zero(v)) return false;
  return true;
}

LPResult lp_maximize(const HPolyhedron& p, const RationalVector& objective) {
  if (objective.size() != p.dim)
    throw std::invalid_argument("objective dimension mismatch");
  LinearProgram lp;
  lp.num_vars = p.dim;
  lp.objective = negate(objective);  // solver minimizes
  lp.ineq_lhs = p.A;
  lp.ineq_rhs = p.b;
  const LPSolution sol = solve_lp(lp);
  LPResult res;
  res.status = sol.status;
  if (sol.status == LPStatus::OPTIMAL) {
    res.value = -sol.objective_value;
    res.maximizer = sol.point;
  }
  return res;
}

RationalVector normalize_ray(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      const Rational s = x > 0 ? x : -x;
      return scale(v, Rational(1) / s);
    }
  }
  return v;
}

RationalVector normalize_line(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return scale(v, Rational(1) / x);
  }
  return v;
}

ConeGenerators cone_dual_description(const RationalMatrix& m, std::size_t dim) {
  if (m.rows() > 0 && m.cols() != dim)
    throw std::invalid_argument("constraint width mismatch");

  ConeGenerators out;
  for (const auto& l : kernel_basis(m)) out.lineality.push_back(normalize_line(l));
  const std::size_t k = dim - out.lineality.size();
  if (k == 0) {
    sort_lex(out.lineality);
    return out;
  }

  // Basis of the orthogonal complement of the lineality space; the pointed
  // part of the cone lives there as { w : (M B) w <= 0 } with trivial kernel.
  std::vector<RationalVector> complement;
  if (out.lineality.empty()) {
    for (std::size_t j = 0; j < dim; ++j) complement.push_back(unit_vector(dim, j));
  } else {
    complement = kernel_basis(RationalMatrix::from_rows(out.lineality, dim));
  }

  RationalMatrix reduced(m.rows(), k);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      reduced.at(i, j) = dot(m.row(i), complement[j]);

  // Greedy initial simplicial cone: the first k linearly independent rows.
  std::vector<std::size_t> initial;
  {
    RationalMatrix probe(0, k);
    for (std::size_t i = 0; i < m.rows() && initial.size() < k; ++i) {
      probe.append_row(reduced.row(i));
      if (rank(probe) == initial.size() + 1) {
        initial.push_back(i);
      } else {
        RationalMatrix trimmed(0, k);
        for (std::size_t idx : initial) trimmed.append_row(reduced.row(idx));
        probe = trimmed;
      }
    }
  }
  if (initial.size() != k)
    throw std::logic_error("pointed part rank deficiency");  // cannot happen

  // Rays of { w : N0 w <= 0 } are the columns of -N0^{-1}, obtained by
  // solving N0 x = -e_j exactly.
  RationalMatrix n0(0, k);
  for (std::size_t idx : initial) n0.append_row(reduced.row(idx));
  std::vector<RationalVector> rays;
  for (std::size_t j = 0; j < k; ++j) {
    auto col = solve_unique(n0, negate(unit_vector(k, j)));
    if (!col) throw std::logic_error("singular initial basis");
    rays.push_back(normalize_ray(*col));
  }

  std::vector<std::size_t> processed = initial;
  const auto is_processed = [&](std::size_t i) {
    return std::find(processed.begin(), processed.end(), i) != processed.end();
  };

  // Rank-based adjacency: extreme rays r1, r2 of the current pointed cone are
  // adjacent iff the processed rows tight at both have rank k-2.
  const auto adjacent = [&](const RationalVector& r1, const RationalVector& r2) {
    RationalMatrix tight(0, k);
    for (std::size_t i : processed) {
      const RationalVector row = reduced.row(i);
      if (dot(row, r1) == 0 && dot(row, r2) == 0) tight.append_row(row);
    }
    return rank(tight) == k - 2;
  };

  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (is_processed(i)) continue;
    const RationalVector row = reduced.row(i);
    std::vector<RationalVector> keep, inside, outside;
    std::vector<Rational> val_inside, val_outside;
    for (const auto& r : rays) {
      const Rational v = dot(row, r);
      if (v <= 0) keep.push_back(r);
      if (v < 0) {
        inside.push_back(r);
        val_inside.push_back(v);
      } else if (v > 0) {
        outside.push_back(r);
        val_outside.push_back(v);
      }
    }
    for (std::size_t a = 0; a < inside.size(); ++a) {
      for (std::size_t b = 0; b < outside.size(); ++b) {
        if (!adjacent(inside[a], outside[b])) continue;
        // Positive combination vanishing on the new row.
        RationalVector fresh = add(scale(inside[a], val_outside[b]),
                                   scale(outside[b], -val_inside[a]));
        keep.push_back(normalize_ray(fresh));
      }
    }
    sort_lex(keep);
    dedupe_sorted(keep);
    rays = std::move(keep);
    processed.push_back(i);
  }

  for (const auto& r : rays) {
    RationalVector lifted(dim, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      lifted = add(lifted, scale(complement[j], r[j]));
    out.rays.push_back(normalize_ray(lifted));
  }
  sort_lex(out.rays);
  sort_lex(out.lineality);
  return out;
}

VPolyhedron dd_convert(const HPolyhedron& h) {
  const std::size_t d = h.dim;
  RationalMatrix m(0, d + 1);
  for (std::size_t i = 0; i < h.A.rows(); ++i) {
    RationalVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = h.A.at(i, j);
    row[d] = -h.b[i];
    m.append_row(row);
  }
  {
    RationalVector row(d + 1);
    row[d] = -1;  // homogenizing coordinate stays nonnegative
    m.append_row(row);
  }

  const ConeGenerators gen = cone_dual_description(m, d + 1);
  VPolyhedron v;
  v.dim = d;
  for (const auto& l : gen.lineality) {
    if (l[d] != 0) throw std::logic_error("lineality escaped homogenization");
    v.lineality.push_back(normalize_line(RationalVector(l.begin(), l.end() - 1)));
  }
  for (const auto& r : gen.rays) {
    const Rational t = r[d];
    RationalVector x(r.begin(), r.end() - 1);
    if (t > 0) {
      v.vertices.push_back(scale(x, Rational(1) / t));
    } else if (t == 0) {
      v.rays.push_back(normalize_ray(x));
    } else {
      throw std::logic_error("negative homogenizing coordinate");
    }
  }
  if (v.vertices.empty()) return {{}, {}, {}, d};
  sort_lex(v.vertices);
  sort_lex(v.rays);
  sort_lex(v.lineality);
  dedupe_sorted(v.rays);
  dedupe_sorted(v.lineality);
  return v;
}

HPolyhedron dd_convert(const VPolyhedron& v) {
  const std::size_t d = v.dim;
  if (v.is_empty()) return HPolyhedron::empty(d);

  // Rows of this system are the lifted generators; its solution cone is the
  // polar of the homogenization, whose generators are the facets we want.
  RationalMatrix m(0, d + 1);
  const auto lift = [&](const RationalVector& g, const Rational& last) {
    RationalVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = g[j];
    row[d] = last;
    m.append_row(row);
  };
  for (const auto& p : v.vertices) lift(p, Rational(1));
  for (const auto& r : v.rays) lift(r, Rational(0));
  for (const auto& l : v.lineality) {
    lift(l, Rational(0));
    lift(negate(l), Rational(0));
  }

  const ConeGenerators polar = cone_dual_description(m, d + 1);
  std::vector<RationalVector> rows;
  const auto push_row = [&](const RationalVector& w) {
    RationalVector a(w.begin(), w.end() - 1);
    if (is_zero(a)) return;  // the t >= 0 artifact carries no facet
    RationalVector row = normalize_ray(w);
    rows.push_back(std::move(row));
  };
  for (const auto& w : polar.rays) push_row(w);
  for (const auto& w : polar.lineality) {
    push_row(w);
    push_row(negate(w));
  }
  sort_lex(rows);
  dedupe_sorted(rows);

  HPolyhedron h;
  h.dim = d;
  h.A = RationalMatrix(0, d);
  for (const auto& row : rows) {
    h.A.append_row(RationalVector(row.begin(), row.end() - 1));
    h.b.push_back(-row[d]);
  }
  return h;
}

VPolyhedron minkowski_sum(const VPolyhedron& p, const VPolyhedron& q) {
  if (p.dim != q.dim) throw std::invalid_argument("dimension mismatch");
  VPolyhedron out;
  out.dim = p.dim;
  if (p.is_empty() || q.is_empty()) return out;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) out.vertices.push_back(add(a, b));
  out.rays = p.rays;
  out.rays.insert(out.rays.end(), q.rays.begin(), q.rays.end());
  out.lineality = p.lineality;
  out.lineality.insert(out.lineality.end(), q.lineality.begin(), q.lineality.end());
  sort_lex(out.vertices);
  sort_lex(out.rays);
  sort_lex(out.lineality);
  dedupe_sorted(out.vertices);
  dedupe_sorted(out.rays);
  return out;
}

VPolyhedron linear_image(const RationalMatrix& m, const VPolyhedron& v) {
  VPolyhedron out;
  out.dim = m.rows();
  if (v.is_empty()) return out;
  for (const auto& p : v.vertices) out.vertices.push_back(matvec(m, p));
  for (const auto& r : v.rays) {
    RationalVector img = matvec(m, r);
    if (!is_zero(img)) out.rays.push_back(normalize_ray(img));
  }
  for (const auto& l : v.lineality) {
    RationalVector img = matvec(m, l);
    if (!is_zero(img)) out.lineality.push_back(normalize_line(img));
  }
  return out;
}

HPolyhedron polar_cone(const VPolyhedron& c) {
  if (!c.is_cone()) throw std::invalid_argument("input not a cone");
  HPolyhedron h;
  h.dim = c.dim;
  h.A = RationalMatrix(0, c.dim);
  std::vector<RationalVector> rows;
  for (const auto& r : c.rays) rows.push_back(r);
  for (const auto& l : c.lineality) {
    rows.push_back(l);
    rows.push_back(negate(l));
  }
  sort_lex(rows);
  for (const auto& row : rows) {
    h.A.append_row(row);
    h.b.push_back(Rational(0));
  }
  return h;
}

bool h_contains_point(const HPolyhedron& h, const RationalVector& x) {
  if (x.size() != h.dim) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < h.A.rows(); ++i)
    if (dot(h.A.row(i), x) > h.b[i]) return false;
  return true;
}

bool h_is_empty(const HPolyhedron& h) {
  LinearProgram lp;
  lp.num_vars = h.dim;
  lp.ineq_lhs = h.A;
  lp.ineq_rhs = h.b;
  return solve_lp(lp).status == LPStatus::INFEASIBLE;
}

bool h_contains_v(const HPolyhedron& h, const VPolyhedron& v) {
  if (h.dim != v.dim) throw std::invalid_argument("dimension mismatch");
  for (const auto& p : v.vertices)
    if (!h_contains_point(h, p)) return false;
  for (const auto& r : v.rays) {
    const RationalVector img = matvec(h.A, r);
    for (const auto& x : img)
      if (x > 0) return false;
  }
  for (const auto& l : v.lineality) {
    if (!is_zero(matvec(h.A, l))) return false;
  }
  return true;
}

}  // namespace sagecirc
