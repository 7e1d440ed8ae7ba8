#include "sagecirc/signomial.hpp"

#include <cmath>
#include <stdexcept>

namespace sagecirc {

Signomial make_signomial(Support support, RationalVector exact_coeffs) {
  if (exact_coeffs.size() != support.size())
    throw std::invalid_argument("coefficient length mismatch");
  Signomial f;
  f.coeffs.reserve(exact_coeffs.size());
  for (const auto& c : exact_coeffs) f.coeffs.push_back(static_cast<double>(c));
  f.exact_coeffs = std::move(exact_coeffs);
  f.support = std::move(support);
  return f;
}

Signomial make_signomial(Support support, std::vector<double> coeffs) {
  if (coeffs.size() != support.size())
    throw std::invalid_argument("coefficient length mismatch");
  return Signomial{std::move(support), std::move(coeffs), std::nullopt};
}

double evaluate(const Signomial& f, const std::vector<double>& x) {
  if (x.size() != f.support.n) throw std::invalid_argument("dimension mismatch");
  double acc = 0;
  for (std::size_t j = 0; j < f.support.size(); ++j) {
    double exponent = 0;
    for (std::size_t i = 0; i < f.support.n; ++i)
      exponent += static_cast<double>(f.support.points[j][i]) * x[i];
    acc += f.coeffs[j] * std::exp(exponent);
  }
  return acc;
}

double grid_min(const Signomial& f, const GridBox& box) {
  const std::size_t n = f.support.n;
  if (box.lo.size() != n || box.hi.size() != n)
    throw std::invalid_argument("box dimension mismatch");
  if (box.resolution == 0) throw std::invalid_argument("empty grid");
  for (std::size_t i = 0; i < n; ++i)
    if (box.lo[i] > box.hi[i]) throw std::invalid_argument("empty box");

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = box.resolution == 1
                 ? box.lo[i]
                 : box.lo[i] + (box.hi[i] - box.lo[i]) *
                                   static_cast<double>(idx[i]) /
                                   static_cast<double>(box.resolution - 1);
    }
    best = std::min(best, evaluate(f, x));
    std::size_t d = 0;
    while (d < n && ++idx[d] == box.resolution) idx[d++] = 0;
    if (d == n) break;
  }
  return best;
}

}  // namespace sagecirc
