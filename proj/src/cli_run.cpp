#include "sagecirc/cli_run.hpp"

#include "sagecirc/reduced.hpp"

#include <sstream>

namespace sagecirc {

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Support& need_support(const ProblemSpec& spec) {
  if (!spec.support) throw CliError("missing 'support'");
  return *spec.support;
}

const HPolyhedron& need_x(const ProblemSpec& spec) {
  if (!spec.x) throw CliError("missing 'x'");
  return *spec.x;
}

const Signomial& need_signomial(const ProblemSpec& spec) {
  if (!spec.signomial) throw CliError("missing 'signomial'");
  return *spec.signomial;
}

SortedAlphas need_alphas(const ProblemSpec& spec) {
  const Support& s = need_support(spec);
  if (s.n != 1) throw CliError("univariate commands need a 1-dimensional support");
  std::vector<Rational> alphas;
  for (const auto& p : s.points) alphas.push_back(p[0]);
  return make_sorted_alphas(std::move(alphas));
}

GridBox parse_grid(const std::string& text, std::size_t dim) {
  const auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
  };
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw CliError("grid must be 'lo:hi:count'");
  const auto los = split(parts[0], ',');
  const auto his = split(parts[1], ',');
  if (los.size() != dim || his.size() != dim)
    throw CliError("grid bounds do not match the support dimension");
  GridBox box;
  for (const auto& s : los) box.lo.push_back(std::stod(s));
  for (const auto& s : his) box.hi.push_back(std::stod(s));
  box.resolution = static_cast<std::size_t>(std::stoul(parts[2]));
  return box;
}

ReducedSet reduce_for(const Support& s, const HPolyhedron& x,
                      std::vector<Circuit>* all_out = nullptr) {
  std::vector<Circuit> all = enumerate_circuits(s, x);
  if (all_out) *all_out = all;
  return reduced_circuits(build_circuit_graph(std::move(all), s.size()));
}

Json run_circuits(const ProblemSpec& spec, const CliOverrides& ov) {
  const Support& s = need_support(spec);
  const std::vector<Circuit> cs =
      ov.beta ? enumerate_circuits(s, need_x(spec), *ov.beta)
              : enumerate_circuits(s, need_x(spec));
  Json out;
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(circuit_to_json(c));
  out["circuits"] = std::move(arr);
  return out;
}

Json run_reduced(const ProblemSpec& spec) {
  const Support& s = need_support(spec);
  const ReducedSet r = reduce_for(s, need_x(spec));
  Json arr = Json::array();
  for (const auto& c : r.circuits) {
    Json j = circuit_to_json(c);
    j["witness"] = rational_vector_to_json(minimality_witness(r, c));
    arr.push_back(std::move(j));
  }
  Json out;
  out["reduced"] = std::move(arr);
  return out;
}

Json run_age_check(const ProblemSpec& spec, const CliOverrides& ov, int& exit_code) {
  const Support& s = need_support(spec);
  const HPolyhedron& x = need_x(spec);
  const Signomial& f = need_signomial(spec);
  Json out;
  Json relent = Json::array();
  for (const auto& w : spec.witnesses)
    relent.push_back(check_relent_certificate(f, w, x, spec.tolerances));
  out["relent"] = std::move(relent);
  if (ov.circuit_index) {
    const std::vector<Circuit> cs = enumerate_circuits(s, x);
    if (*ov.circuit_index >= cs.size())
      throw CliError("circuit index out of range");
    out["age"] = lambda_age_check(f, cs[*ov.circuit_index], spec.tolerances);
  }
  exit_code = 0;
  return out;
}

Json run_membership(const ProblemSpec& spec, const CliOverrides& ov,
                    bool with_decomposition, int& exit_code) {
  const Support& s = need_support(spec);
  const Signomial& f = need_signomial(spec);
  const ReducedSet r = reduce_for(s, need_x(spec));
  const MembershipResult res = sage_membership(f, r, spec.tolerances);
  Json out = certificate_to_json(
      res.status, res.slack,
      with_decomposition ? res.decomposition : std::optional<SageDecomposition>{});
  if (ov.grid) out["grid_min"] = grid_min(f, parse_grid(*ov.grid, s.n));
  exit_code = res.status == MembershipStatus::INCONCLUSIVE ? 2 : 0;
  return out;
}

Json run_refine(const ProblemSpec& spec) {
  const Support& s = need_support(spec);
  const Signomial& f = need_signomial(spec);
  if (spec.witnesses.empty()) throw CliError("missing 'witnesses'");
  const std::vector<Circuit> circuits = enumerate_circuits(s, need_x(spec));
  const SageDecomposition dec =
      refine_certificate(f, circuits, spec.witnesses, spec.tolerances);
  return certificate_to_json(MembershipStatus::MEMBER, 0.0, dec);
}

Json run_univariate(const ProblemSpec& spec, int& exit_code) {
  if (!spec.univariate) throw CliError("missing 'univariate' request");
  const UnivariateRequest& req = *spec.univariate;
  const SortedAlphas a = need_alphas(spec);
  Json out;
  if (req.op == "circuits" || req.op == "reduced") {
    Json arr = Json::array();
    const auto cs =
        req.op == "circuits" ? univariate_circuits(a) : univariate_reduced(a);
    for (const auto& c : cs) arr.push_back(circuit_to_json(c));
    out[req.op] = std::move(arr);
  } else if (req.op == "extreme") {
    const Signomial f = extreme_generator(a, req.index, req.c_lo, req.c_hi);
    out["coeffs"] = coefficients_to_json(f.coeffs, f.exact_coeffs);
    out["exact"] = f.is_rational();
  } else if (req.op == "classify") {
    const ExtremeClass c =
        classify_extreme(need_signomial(spec), a, spec.tolerances);
    out["class"] = extreme_class_name(c);
  } else {
    throw CliError("unknown univariate op '" + req.op + "'");
  }
  exit_code = 0;
  return out;
}

Json run_separate(const ProblemSpec& spec, const CliOverrides& ov) {
  const Support& s = need_support(spec);
  const ReducedSet r = reduce_for(s, need_x(spec));
  if (!ov.circuit_index) throw CliError("separate needs --circuit-index");
  if (*ov.circuit_index >= r.circuits.size())
    throw CliError("circuit index out of range");
  const Circuit& target = r.circuits[*ov.circuit_index];
  const RationalVector y = minimality_witness(r, target);
  const Rational u = evaluate_form(functional_form(target), y);
  const std::vector<double> z = separating_functional(y, target);
  Json out;
  out["target"] = circuit_to_json(target);
  out["y"] = rational_vector_to_json(y);
  out["u"] = to_string(u);
  Json zj = Json::array();
  for (double v : z) zj.push_back(v);
  out["z"] = std::move(zj);
  return out;
}

}  // namespace

CliResult cli_run(const std::string& command, const std::string& json_text,
                  const CliOverrides& overrides) {
  CliResult result;
  Json out;
  try {
    ProblemSpec spec = parse_problem(json_text);
    if (overrides.tol) spec.tolerances.tol = *overrides.tol;
    if (overrides.snap_radius) spec.tolerances.snap_radius = *overrides.snap_radius;

    int exit_code = 0;
    if (command == "circuits") {
      out = run_circuits(spec, overrides);
    } else if (command == "reduced") {
      out = run_reduced(spec);
    } else if (command == "age-check") {
      out = run_age_check(spec, overrides, exit_code);
    } else if (command == "sage-check") {
      out = run_membership(spec, overrides, false, exit_code);
    } else if (command == "decompose") {
      out = run_membership(spec, overrides, true, exit_code);
    } else if (command == "refine") {
      out = run_refine(spec);
    } else if (command == "univariate") {
      out = run_univariate(spec, exit_code);
    } else if (command == "separate") {
      out = run_separate(spec, overrides);
    } else {
      throw CliError("unknown command '" + command + "'");
    }
    result.exit_code = exit_code;
  } catch (const SpecError& e) {
    out = Json{{"error", e.what()}, {"at", e.path}};
    result.exit_code = 1;
  } catch (const std::exception& e) {
    out = Json{{"error", e.what()}};
    result.exit_code = 1;
  }
  result.output = out.dump(2) + "\n";
  return result;
}

}  // namespace sagecirc
