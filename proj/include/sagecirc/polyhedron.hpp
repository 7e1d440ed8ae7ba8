#pragma once

#include "sagecirc/lp.hpp"

#include <vector>

namespace sagecirc {

/// Inequality form { x in R^d : Ax <= b }. May be empty or unbounded; zero
/// rows encode the whole space.
struct HPolyhedron {
  RationalMatrix A;
  RationalVector b;
  std::size_t dim = 0;

  static HPolyhedron whole_space(std::size_t dim);
  static HPolyhedron empty(std::size_t dim);
};

/// Generator form conv(vertices) + cone(rays) + span(lineality). An empty
/// vertex list means the empty set. When the set has lines, "vertices" are
/// representative points of the minimal faces.
struct VPolyhedron {
  std::vector<RationalVector> vertices;
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
  std::size_t dim = 0;

  bool is_empty() const { return vertices.empty(); }
  bool is_cone() const;
};

/// Exact maximum of objective^T x over P; UNBOUNDED iff the support function
/// is +infinity in that direction, INFEASIBLE iff P is empty.
LPResult lp_maximize(const HPolyhedron& p, const RationalVector& objective);

/// sigma_P(y) as an LPResult (same contract as lp_maximize).
inline LPResult support_value(const HPolyhedron& p, const RationalVector& y) {
  return lp_maximize(p, y);
}

VPolyhedron dd_convert(const HPolyhedron& h);
HPolyhedron dd_convert(const VPolyhedron& v);

/// Generator-level Minkowski sum: pairwise vertex sums, ray/lineality unions.
/// Output may carry redundant generators until canonicalized via dd_convert.
VPolyhedron minkowski_sum(const VPolyhedron& p, const VPolyhedron& q);

/// Image of the generators under x -> Mx (dimension = rows of M).
VPolyhedron linear_image(const RationalMatrix& m, const VPolyhedron& v);

/// Polar cone { y : g^T y <= 0 for every generator g }, lineality generators
/// contributing equality pairs. Throws if the input is not a cone.
HPolyhedron polar_cone(const VPolyhedron& c);

bool h_contains_point(const HPolyhedron& h, const RationalVector& x);
bool h_is_empty(const HPolyhedron& h);

/// One-directional exact containment test: every generator of `v` feasible
/// for `h` and every ray/lineality in the recession cone of `h`.
bool h_contains_v(const HPolyhedron& h, const VPolyhedron& v);

/// Scales a ray so its first nonzero coordinate has absolute value one.
RationalVector normalize_ray(const RationalVector& v);
/// Scales a line generator so its first nonzero coordinate equals one.
RationalVector normalize_line(const RationalVector& v);

/// Dual description of the cone { z : Mz <= 0 }: lineality basis plus the
/// extreme rays of the pointed quotient. The workhorse behind dd_convert.
struct ConeGenerators {
  std::vector<RationalVector> lineality;
  std::vector<RationalVector> rays;
};
ConeGenerators cone_dual_description(const RationalMatrix& m, std::size_t dim);

}  // namespace sagecirc
