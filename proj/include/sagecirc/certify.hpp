#pragma once

#include "sagecirc/reduced.hpp"
#include "sagecirc/signomial.hpp"

#include <optional>
#include <vector>

namespace sagecirc {

/// Relative-entropy dual variable for an AGE membership certificate:
/// sum zero, nonnegative off beta, finite support value. Exact entries ride
/// along when the witness came from rational data.
struct AGEWitness {
  std::size_t beta = 0;
  std::vector<double> nu;
  std::optional<RationalVector> nu_exact;
};

struct CertifyOptions {
  double tol = 1e-8;          // log-domain tolerance
  double snap_radius = 1e-2;  // max l-inf distance when snapping witnesses
};

/// sigma_X(-A nu) + D(nu off beta, e c off beta) <= c_beta, evaluated with
/// exact sigma and floating relative entropy under the usual conventions
/// (0 log 0 = 0, positive mass against a zero coefficient is +infinity).
/// Throws if c has a negative entry off beta.
bool check_relent_certificate(const Signomial& f, const AGEWitness& w,
                              const HPolyhedron& x,
                              const CertifyOptions& opts = {});

/// Weighted AM/GM inequality of the witnessed AGE cone:
/// prod (c_alpha / lambda_alpha)^{lambda_alpha} >= -c_beta e^{sigma},
/// checked in the log domain; trivially true when c_beta >= 0 and c >= 0.
bool lambda_age_check(const Signomial& f, const Circuit& lam,
                      const CertifyOptions& opts = {});

/// nu = |c_beta| lambda; requires c_beta < 0.
AGEWitness witness_from_circuit(const Signomial& f, const Circuit& lam);

/// Direction and scale of a witness: lambda = nu / |nu_beta|, s = |nu_beta|.
/// Throws when nu has no negative entry.
std::pair<std::vector<double>, double> witness_direction(const AGEWitness& w);

/// Dual membership: e^{sigma} prod v^lambda >= v_beta for every reduced
/// circuit, with the zero-coordinate limit conventions. Throws on negative v.
bool dual_membership_check(const std::vector<double>& v, const ReducedSet& r,
                           const CertifyOptions& opts = {});

enum class PowerConeSide { PRIMAL, DUAL };

/// Weighted power cone attached to a normalized circuit. The primal cone
/// asks prod z^lambda >= |z_beta| over the positive support; the dual form
/// divides each factor by its weight. Entries off the circuit support are
/// ignored.
struct PowerConeSpec {
  Circuit lambda;
  PowerConeSide side = PowerConeSide::PRIMAL;
};

bool power_cone_member(const PowerConeSpec& spec, const std::vector<double>& z,
                       double tol = 1e-8);

enum class MembershipStatus { MEMBER, NOT_MEMBER, INCONCLUSIVE };

struct DecompositionTerm {
  Circuit circuit;
  std::vector<double> coeffs;               // full-length vector over A
  std::optional<RationalVector> exact_coeffs;
};

struct SageDecomposition {
  std::vector<DecompositionTerm> terms;
  std::vector<double> residual;             // posynomial remainder
  std::optional<RationalVector> exact_residual;
};

struct MembershipResult {
  MembershipStatus status = MembershipStatus::INCONCLUSIVE;
  double slack = 0;  // max-slack value in coefficient units; < 0 infeasible
  std::optional<SageDecomposition> decomposition;
};

/// Max-slack feasibility over the reduced power-cone description, solved by
/// a damped-Newton log-barrier method. MEMBER results carry a decomposition
/// that re-verifies term by term; NOT_MEMBER reports the converged negative
/// slack; near-boundary failures surface as INCONCLUSIVE.
MembershipResult sage_membership(const Signomial& f, const ReducedSet& r,
                                 const CertifyOptions& opts = {});

/// Snaps approximate witnesses to enumerated circuits (within snap_radius in
/// l-inf distance), re-solves the decomposition with the circuits fixed, and
/// polishes. For rational inputs the returned coefficients are exact
/// rationals whose sum reconstructs c exactly. Throws when a witness has no
/// nearby circuit or the fixed-circuit program is infeasible.
SageDecomposition refine_certificate(const Signomial& f,
                                     const std::vector<Circuit>& circuits,
                                     const std::vector<AGEWitness>& approx,
                                     const CertifyOptions& opts = {});

/// Violation of the witnessed AGE inequality in the log domain (0 when the
/// term passes with margin). Shared by tests and the refinement polish.
double age_log_violation(const std::vector<double>& coeffs, const Circuit& lam);

}  // namespace sagecirc
