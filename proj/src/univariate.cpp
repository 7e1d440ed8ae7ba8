#include "sagecirc/univariate.hpp"

#include "sagecirc/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace sagecirc {

namespace {

void sort_canonical(std::vector<Circuit>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Circuit& a, const Circuit& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return lex_less(a.lambda, b.lambda);
  });
}

// Interior weights of the three-term circuit at 0-based index i.
std::pair<Rational, Rational> interior_weights(const SortedAlphas& a,
                                               std::size_t i) {
  const Rational span = a.alphas[i + 1] - a.alphas[i - 1];
  return {(a.alphas[i + 1] - a.alphas[i]) / span,
          (a.alphas[i] - a.alphas[i - 1]) / span};
}

std::optional<Integer> integer_nth_root(const Integer& x, unsigned r) {
  if (x < 0) return std::nullopt;
  if (x == 0 || x == 1 || r == 1) return x;
  Integer lo = 0, hi = Integer(1) << (msb(x) / r + 2);
  while (lo < hi) {
    const Integer mid = (lo + hi + 1) / 2;
    if (pow(mid, r) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (pow(lo, r) == x) return lo;
  return std::nullopt;
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned r) {
  const auto num = integer_nth_root(numerator(x), r);
  if (!num) return std::nullopt;
  const auto den = integer_nth_root(denominator(x), r);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

Rational rational_int_pow(const Rational& base, unsigned e) {
  return Rational(pow(numerator(base), e), pow(denominator(base), e));
}

// lambda_lo = p/r, lambda_hi = q/r in lowest common terms, p + q = r.
struct WeightPowers {
  unsigned p, q, r;
};

std::optional<WeightPowers> weight_powers(const Rational& lo, const Rational& hi) {
  const Integer r = lcm(denominator(lo), denominator(hi));
  if (r > 64) return std::nullopt;  // exact path only for small denominators
  const unsigned ru = r.convert_to<unsigned>();
  const Integer p = numerator(lo) * (r / denominator(lo));
  const Integer q = numerator(hi) * (r / denominator(hi));
  return WeightPowers{p.convert_to<unsigned>(), q.convert_to<unsigned>(), ru};
}

}  // namespace

SortedAlphas make_sorted_alphas(std::vector<Rational> alphas) {
  if (alphas.empty()) throw std::invalid_argument("need at least one exponent");
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (!(alphas[i - 1] < alphas[i]))
      throw std::invalid_argument("exponents must be strictly increasing");
  return SortedAlphas{std::move(alphas)};
}

Support to_support(const SortedAlphas& a) {
  std::vector<RationalVector> pts;
  pts.reserve(a.size());
  for (const auto& alpha : a.alphas) pts.push_back({alpha});
  return make_support(std::move(pts));
}

HPolyhedron half_line_domain() {
  HPolyhedron h;
  h.dim = 1;
  h.A = RationalMatrix{{Rational(-1)}};
  h.b = {Rational(0)};
  return h;
}

std::vector<Circuit> univariate_circuits(const SortedAlphas& a) {
  const std::size_t m = a.size();
  std::vector<Circuit> cs;
  if (m < 2) return cs;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      Circuit c;
      c.lambda = zero_vector(m);
      c.lambda[j] = -1;
      c.lambda[k] = 1;
      c.beta = j;
      c.sigma = 0;
      cs.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Rational span = a.alphas[k] - a.alphas[i];
        Circuit c;
        c.lambda = zero_vector(m);
        c.lambda[k] = (a.alphas[j] - a.alphas[i]) / span;
        c.lambda[i] = (a.alphas[k] - a.alphas[j]) / span;
        c.lambda[j] = -1;
        c.beta = j;
        c.sigma = 0;
        cs.push_back(std::move(c));
      }
    }
  }
  sort_canonical(cs);
  return cs;
}

std::vector<Circuit> univariate_reduced(const SortedAlphas& a) {
  const std::size_t m = a.size();
  std::vector<Circuit> cs;
  if (m < 2) return cs;
  {
    Circuit c;
    c.lambda = zero_vector(m);
    c.lambda[0] = -1;
    c.lambda[1] = 1;
    c.beta = 0;
    c.sigma = 0;
    cs.push_back(std::move(c));
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const auto [w_lo, w_hi] = interior_weights(a, i);
    Circuit c;
    c.lambda = zero_vector(m);
    c.lambda[i - 1] = w_lo;
    c.lambda[i + 1] = w_hi;
    c.lambda[i] = -1;
    c.beta = i;
    c.sigma = 0;
    cs.push_back(std::move(c));
  }
  sort_canonical(cs);
  return cs;
}

Signomial extreme_generator(const SortedAlphas& a, std::size_t i,
                            const Rational& c_lo, const Rational& c_hi) {
  const std::size_t m = a.size();
  if (i == 0 || i + 1 >= m) throw std::invalid_argument("index not interior");
  if (c_lo <= 0 || c_hi <= 0)
    throw std::invalid_argument("outer coefficients must be positive");
  const auto [w_lo, w_hi] = interior_weights(a, i);
  if (c_lo * w_hi < c_hi * w_lo)
    throw std::invalid_argument(
        "ratio condition violated: signomial would be strictly positive");

  // Middle coefficient -(c_lo/w_lo)^{w_lo} (c_hi/w_hi)^{w_hi}, exact when the
  // r-th root of the assembled power product is rational.
  std::optional<Rational> exact_mid;
  if (const auto wp = weight_powers(w_lo, w_hi)) {
    const Rational product = rational_int_pow(c_lo / w_lo, wp->p) *
                             rational_int_pow(c_hi / w_hi, wp->q);
    if (const auto root = rational_nth_root(product, wp->r)) exact_mid = -*root;
  }

  Support support = to_support(a);
  if (exact_mid) {
    RationalVector coeffs = zero_vector(m);
    coeffs[i - 1] = c_lo;
    coeffs[i + 1] = c_hi;
    coeffs[i] = *exact_mid;
    return make_signomial(std::move(support), std::move(coeffs));
  }
  std::vector<double> coeffs(m, 0.0);
  coeffs[i - 1] = static_cast<double>(c_lo);
  coeffs[i + 1] = static_cast<double>(c_hi);
  const double log_mid =
      static_cast<double>(w_lo) *
          (std::log(static_cast<double>(c_lo)) -
           std::log(static_cast<double>(w_lo))) +
      static_cast<double>(w_hi) *
          (std::log(static_cast<double>(c_hi)) -
           std::log(static_cast<double>(w_hi)));
  coeffs[i] = -std::exp(log_mid);
  return make_signomial(std::move(support), std::move(coeffs));
}

double extreme_minimizer(const SortedAlphas& a, std::size_t i,
                         const Rational& c_lo, const Rational& c_hi) {
  const auto [w_lo, w_hi] = interior_weights(a, i);
  const double ratio = static_cast<double>(c_lo) * static_cast<double>(w_hi) /
                       (static_cast<double>(c_hi) * static_cast<double>(w_lo));
  return std::log(ratio) /
         static_cast<double>(a.alphas[i + 1] - a.alphas[i - 1]);
}

ExtremeClass classify_extreme(const Signomial& f, const SortedAlphas& a,
                              const CertifyOptions& opts) {
  const std::size_t m = a.size();
  if (f.support.n != 1 || f.support.size() != m)
    throw std::invalid_argument("support mismatch");
  for (std::size_t j = 0; j < m; ++j)
    if (f.support.points[j][0] != a.alphas[j])
      throw std::invalid_argument("support mismatch");

  ReducedSet reduced;
  reduced.circuits = univariate_reduced(a);
  for (std::size_t k = 0; k < reduced.circuits.size(); ++k)
    reduced.graph_indices.push_back(k);
  const MembershipResult membership = sage_membership(f, reduced, opts);
  if (membership.status == MembershipStatus::NOT_MEMBER)
    return ExtremeClass::NOT_MEMBER;

  std::vector<std::size_t> supp;
  for (std::size_t j = 0; j < m; ++j)
    if (f.coeffs[j] != 0) supp.push_back(j);

  if (supp.size() == 1 && supp[0] == 0 && f.coeffs[0] > 0)
    return ExtremeClass::TYPE1;

  if (supp.size() == 2 && supp[0] == 0 && supp[1] == 1 && f.coeffs[1] > 0) {
    if (f.is_rational()) {
      if ((*f.exact_coeffs)[0] == -(*f.exact_coeffs)[1])
        return ExtremeClass::TYPE2;
    } else if (std::abs(f.coeffs[0] + f.coeffs[1]) <=
               opts.tol * std::abs(f.coeffs[1])) {
      return ExtremeClass::TYPE2;
    }
  }

  if (supp.size() == 3 && supp[0] + 2 == supp[2] && supp[0] + 1 == supp[1] &&
      supp[1] >= 1 && supp[1] + 1 < m && f.coeffs[supp[0]] > 0 &&
      f.coeffs[supp[2]] > 0 && f.coeffs[supp[1]] < 0) {
    const std::size_t i = supp[1];
    const auto [w_lo, w_hi] = interior_weights(a, i);
    bool ratio_ok;
    if (f.is_rational()) {
      ratio_ok = (*f.exact_coeffs)[i - 1] * w_hi >= (*f.exact_coeffs)[i + 1] * w_lo;
    } else {
      ratio_ok = f.coeffs[i - 1] * static_cast<double>(w_hi) >=
                 f.coeffs[i + 1] * static_cast<double>(w_lo) -
                     1e-9 * std::abs(f.coeffs[i + 1]);
    }
    if (ratio_ok) {
      // Coefficient identity, exact through r-th powers when possible.
      bool identity_ok = false;
      bool decided_exact = false;
      if (f.is_rational()) {
        if (const auto wp = weight_powers(w_lo, w_hi)) {
          const Rational product =
              rational_int_pow((*f.exact_coeffs)[i - 1] / w_lo, wp->p) *
              rational_int_pow((*f.exact_coeffs)[i + 1] / w_hi, wp->q);
          identity_ok =
              rational_int_pow(-(*f.exact_coeffs)[i], wp->r) == product;
          decided_exact = true;
        }
      }
      if (!decided_exact) {
        const double lhs = std::log(-f.coeffs[i]);
        const double rhs =
            static_cast<double>(w_lo) *
                (std::log(f.coeffs[i - 1]) -
                 std::log(static_cast<double>(w_lo))) +
            static_cast<double>(w_hi) *
                (std::log(f.coeffs[i + 1]) -
                 std::log(static_cast<double>(w_hi)));
        identity_ok = std::abs(lhs - rhs) <= 1e-9;
      }
      if (identity_ok) return ExtremeClass::TYPE3;
    }
  }

  return ExtremeClass::NOT_EXTREME;
}

}  // namespace sagecirc
