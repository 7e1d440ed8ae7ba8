#include "sagecirc/json_io.hpp"

namespace sagecirc {

namespace {

std::string idx_path(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

Rational parse_rational_at(const Json& node, const std::string& path) {
  if (node.is_number_integer())
    return Rational(node.get<long long>());
  if (node.is_string()) {
    if (auto q = parse_rational(node.get<std::string>())) return *q;
    throw SpecError(path, "not a rational 'p/q' string");
  }
  throw SpecError(path, "expected a rational string or integer");
}

RationalVector parse_rational_vector(const Json& node, const std::string& path) {
  if (!node.is_array()) throw SpecError(path, "expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < node.size(); ++i)
    v.push_back(parse_rational_at(node[i], idx_path(path, i)));
  return v;
}

Support parse_support(const Json& node, const std::string& path) {
  if (!node.is_object() || !node.contains("points"))
    throw SpecError(path, "expected an object with 'points'");
  const Json& pts = node["points"];
  if (!pts.is_array() || pts.empty())
    throw SpecError(path + "/points", "expected a nonempty array");
  std::vector<RationalVector> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string ppath = idx_path(path + "/points", i);
    RationalVector p = pts[i].is_array()
                           ? parse_rational_vector(pts[i], ppath)
                           : RationalVector{parse_rational_at(pts[i], ppath)};
    if (!points.empty() && p.size() != points[0].size())
      throw SpecError(ppath, "inconsistent point dimension");
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == p)
        throw SpecError(ppath, "duplicate support point");
    points.push_back(std::move(p));
  }
  return make_support(std::move(points));
}

HPolyhedron parse_h_polyhedron(const Json& node, const std::string& path,
                               std::size_t expect_dim) {
  if (!node.is_object() || !node.contains("A") || !node.contains("b"))
    throw SpecError(path, "expected an object with 'A' and 'b'");
  const Json& a = node["A"];
  const Json& b = node["b"];
  if (!a.is_array()) throw SpecError(path + "/A", "expected an array of rows");
  HPolyhedron h;
  h.dim = expect_dim;
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalVector row = parse_rational_vector(a[i], idx_path(path + "/A", i));
    if (expect_dim == 0 && i == 0) h.dim = row.size();
    if (row.size() != h.dim)
      throw SpecError(idx_path(path + "/A", i), "row width mismatch");
    rows.push_back(std::move(row));
  }
  h.A = RationalMatrix::from_rows(rows, h.dim);
  h.b = parse_rational_vector(b, path + "/b");
  if (h.b.size() != rows.size())
    throw SpecError(path + "/b", "length differs from the number of rows of A");
  return h;
}

Signomial parse_signomial(const Json& node, const std::string& path,
                          const Support& support) {
  if (!node.is_object() || !node.contains("coeffs"))
    throw SpecError(path, "expected an object with 'coeffs'");
  const Json& cs = node["coeffs"];
  if (!cs.is_array()) throw SpecError(path + "/coeffs", "expected an array");
  if (cs.size() != support.size())
    throw SpecError(path + "/coeffs", "length differs from the support size");
  bool exact = true;
  for (const auto& c : cs)
    if (c.is_number_float()) exact = false;
  if (exact) {
    RationalVector v;
    for (std::size_t i = 0; i < cs.size(); ++i)
      v.push_back(parse_rational_at(cs[i], idx_path(path + "/coeffs", i)));
    return make_signomial(support, std::move(v));
  }
  std::vector<double> v;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Json& c = cs[i];
    if (c.is_number()) {
      v.push_back(c.get<double>());
    } else {
      v.push_back(static_cast<double>(
          parse_rational_at(c, idx_path(path + "/coeffs", i))));
    }
  }
  return make_signomial(support, std::move(v));
}

AGEWitness parse_witness(const Json& node, const std::string& path,
                         std::size_t m) {
  if (!node.is_object() || !node.contains("beta") || !node.contains("nu"))
    throw SpecError(path, "expected an object with 'beta' and 'nu'");
  AGEWitness w;
  if (!node["beta"].is_number_unsigned())
    throw SpecError(path + "/beta", "expected a nonnegative index");
  w.beta = node["beta"].get<std::size_t>();
  if (w.beta >= m) throw SpecError(path + "/beta", "index out of range");
  const Json& nu = node["nu"];
  if (!nu.is_array() || nu.size() != m)
    throw SpecError(path + "/nu", "length differs from the support size");
  bool exact = true;
  for (const auto& x : nu)
    if (x.is_number_float()) exact = false;
  if (exact) {
    RationalVector v;
    for (std::size_t i = 0; i < nu.size(); ++i)
      v.push_back(parse_rational_at(nu[i], idx_path(path + "/nu", i)));
    for (const auto& x : v) w.nu.push_back(static_cast<double>(x));
    w.nu_exact = std::move(v);
  } else {
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const Json& x = nu[i];
      if (x.is_number())
        w.nu.push_back(x.get<double>());
      else
        w.nu.push_back(static_cast<double>(
            parse_rational_at(x, idx_path(path + "/nu", i))));
    }
  }
  return w;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("/", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("/", "expected a JSON object");

  ProblemSpec spec;
  if (doc.contains("support")) spec.support = parse_support(doc["support"], "/support");
  if (doc.contains("x")) {
    const std::size_t dim = spec.support ? spec.support->n : 0;
    spec.x = parse_h_polyhedron(doc["x"], "/x", dim);
    if (spec.support && spec.x->dim != spec.support->n)
      throw SpecError("/x", "dimension differs from the support");
  }
  if (doc.contains("signomial")) {
    if (!spec.support)
      throw SpecError("/signomial", "requires a support");
    spec.signomial = parse_signomial(doc["signomial"], "/signomial", *spec.support);
  }
  if (doc.contains("witnesses")) {
    const Json& ws = doc["witnesses"];
    if (!ws.is_array()) throw SpecError("/witnesses", "expected an array");
    if (!spec.support) throw SpecError("/witnesses", "requires a support");
    for (std::size_t i = 0; i < ws.size(); ++i)
      spec.witnesses.push_back(
          parse_witness(ws[i], idx_path("/witnesses", i), spec.support->size()));
  }
  if (doc.contains("univariate")) {
    const Json& u = doc["univariate"];
    if (!u.is_object() || !u.contains("op"))
      throw SpecError("/univariate", "expected an object with 'op'");
    UnivariateRequest req;
    req.op = u["op"].get<std::string>();
    if (u.contains("index")) {
      if (!u["index"].is_number_unsigned())
        throw SpecError("/univariate/index", "expected a nonnegative index");
      req.index = u["index"].get<std::size_t>();
    }
    if (u.contains("c_lo")) req.c_lo = parse_rational_at(u["c_lo"], "/univariate/c_lo");
    if (u.contains("c_hi")) req.c_hi = parse_rational_at(u["c_hi"], "/univariate/c_hi");
    spec.univariate = std::move(req);
  }
  if (doc.contains("tolerances")) {
    const Json& t = doc["tolerances"];
    if (!t.is_object()) throw SpecError("/tolerances", "expected an object");
    if (t.contains("tol")) spec.tolerances.tol = t["tol"].get<double>();
    if (t.contains("snap_radius"))
      spec.tolerances.snap_radius = t["snap_radius"].get<double>();
    if (spec.tolerances.tol <= 0 || spec.tolerances.snap_radius <= 0)
      throw SpecError("/tolerances", "tolerances must be positive");
  }
  return spec;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Json circuit_to_json(const Circuit& c) {
  Json j;
  j["lambda"] = rational_vector_to_json(c.lambda);
  j["beta"] = c.beta;
  j["sigma"] = to_string(c.sigma);
  return j;
}

Json h_polyhedron_to_json(const HPolyhedron& h) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < h.A.rows(); ++i)
    rows.push_back(rational_vector_to_json(h.A.row(i)));
  Json j;
  j["A"] = std::move(rows);
  j["b"] = rational_vector_to_json(h.b);
  return j;
}

Json v_polyhedron_to_json(const VPolyhedron& v) {
  const auto vecs = [](const std::vector<RationalVector>& vs) {
    Json arr = Json::array();
    for (const auto& x : vs) arr.push_back(rational_vector_to_json(x));
    return arr;
  };
  Json j;
  j["vertices"] = vecs(v.vertices);
  j["rays"] = vecs(v.rays);
  j["lineality"] = vecs(v.lineality);
  return j;
}

Json coefficients_to_json(const std::vector<double>& coeffs,
                          const std::optional<RationalVector>& exact) {
  if (exact) return rational_vector_to_json(*exact);
  Json arr = Json::array();
  for (double c : coeffs) arr.push_back(c);
  return arr;
}

std::string status_name(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::MEMBER: return "MEMBER";
    case MembershipStatus::NOT_MEMBER: return "NOT_MEMBER";
    default: return "INCONCLUSIVE";
  }
}

std::string extreme_class_name(ExtremeClass c) {
  switch (c) {
    case ExtremeClass::TYPE1: return "TYPE1";
    case ExtremeClass::TYPE2: return "TYPE2";
    case ExtremeClass::TYPE3: return "TYPE3";
    case ExtremeClass::NOT_EXTREME: return "NOT_EXTREME";
    default: return "NOT_MEMBER";
  }
}

Json certificate_to_json(MembershipStatus status, double slack,
                         const std::optional<SageDecomposition>& dec) {
  Json j;
  Json terms = Json::array();
  if (dec) {
    for (const auto& term : dec->terms) {
      Json t = circuit_to_json(term.circuit);
      t["coeffs"] = coefficients_to_json(term.coeffs, term.exact_coeffs);
      terms.push_back(std::move(t));
    }
  }
  j["terms"] = std::move(terms);
  j["residual"] = dec ? coefficients_to_json(dec->residual, dec->exact_residual)
                      : Json::array();
  j["slack"] = slack;
  j["status"] = status_name(status);
  return j;
}

}  // namespace sagecirc
