#pragma once

#include "sagecirc/certify.hpp"
#include "sagecirc/univariate.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace sagecirc {

using Json = nlohmann::ordered_json;

/// Schema violation with a JSON-pointer location.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), path(std::move(where)) {}
  const std::string path;
};

/// Operation-specific payload for the univariate subcommand.
struct UnivariateRequest {
  std::string op;  // circuits | reduced | extreme | classify
  std::size_t index = 0;
  Rational c_lo;
  Rational c_hi;
};

/// Parsed and validated problem document.
struct ProblemSpec {
  std::optional<Support> support;
  std::optional<HPolyhedron> x;
  std::optional<Signomial> signomial;
  std::vector<AGEWitness> witnesses;
  std::optional<UnivariateRequest> univariate;
  CertifyOptions tolerances;
};

ProblemSpec parse_problem(const std::string& text);

Json rational_vector_to_json(const RationalVector& v);
Json circuit_to_json(const Circuit& c);
Json h_polyhedron_to_json(const HPolyhedron& h);
Json v_polyhedron_to_json(const VPolyhedron& v);
Json coefficients_to_json(const std::vector<double>& coeffs,
                          const std::optional<RationalVector>& exact);

/// Certificate payload: status, slack, decomposition terms and residual.
Json certificate_to_json(MembershipStatus status, double slack,
                         const std::optional<SageDecomposition>& dec);

std::string status_name(MembershipStatus status);
std::string extreme_class_name(ExtremeClass c);

}  // namespace sagecirc
