#include "doctest.h"

#include "sagecirc/cli_run.hpp"

using namespace sagecirc;

namespace {

const char* kHalfLineProblem = R"({
  "support": {"points": [["0"], ["1"], ["2"]]},
  "x": {"A": [["-1"]], "b": ["0"]},
  "signomial": {"coeffs": ["1", "-2", "1"]},
  "witnesses": [{"beta": 1, "nu": ["1", "-2", "1"]}]
})";

}  // namespace

TEST_CASE("parse_problem accepts the minimal document") {
  const ProblemSpec spec = parse_problem(kHalfLineProblem);
  REQUIRE(spec.support.has_value());
  CHECK(spec.support->size() == 3);
  CHECK(spec.support->n == 1);
  REQUIRE(spec.x.has_value());
  CHECK(spec.x->A.rows() == 1);
  REQUIRE(spec.signomial.has_value());
  CHECK(spec.signomial->is_rational());
  REQUIRE(spec.witnesses.size() == 1);
  CHECK(spec.witnesses[0].nu_exact.has_value());
}

TEST_CASE("parse_problem reports schema errors with locations") {
  const char* duplicate = R"({
    "support": {"points": [["0"], ["1"], ["1"]]}
  })";
  try {
    parse_problem(duplicate);
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.path == "/support/points/2");
  }

  const char* bad_b = R"({
    "support": {"points": [["0"], ["1"]]},
    "x": {"A": [["-1"]], "b": ["0", "1"]}
  })";
  try {
    parse_problem(bad_b);
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.path == "/x/b");
  }

  const char* bad_width = R"({
    "support": {"points": [["0", "1"], ["1", "0"]]},
    "x": {"A": [["-1"]], "b": ["0"]}
  })";
  CHECK_THROWS_AS(parse_problem(bad_width), SpecError);

  CHECK_THROWS_AS(parse_problem("not json"), SpecError);
  CHECK_THROWS_AS(parse_problem(R"({"support": {"points": [["1/0"]]}})"),
                  SpecError);
}

TEST_CASE("circuits command output") {
  const CliResult res = cli_run("circuits", kHalfLineProblem);
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.output);
  REQUIRE(out.contains("circuits"));
  CHECK(out["circuits"].size() == 4);

  CliOverrides beta1;
  beta1.beta = 1;
  const Json restricted =
      Json::parse(cli_run("circuits", kHalfLineProblem, beta1).output);
  CHECK(restricted["circuits"].size() == 2);
}

TEST_CASE("reduced command carries witnesses") {
  const Json out = Json::parse(cli_run("reduced", kHalfLineProblem).output);
  REQUIRE(out.contains("reduced"));
  CHECK(out["reduced"].size() == 2);
  for (const auto& c : out["reduced"]) CHECK(c.contains("witness"));
}

TEST_CASE("membership commands and exit codes") {
  const CliResult check = cli_run("sage-check", kHalfLineProblem);
  CHECK(check.exit_code == 0);
  const Json out = Json::parse(check.output);
  CHECK(out["status"] == "MEMBER");
  CHECK(out["terms"].empty());  // sage-check reports the decision only

  const CliResult dec = cli_run("decompose", kHalfLineProblem);
  const Json dout = Json::parse(dec.output);
  CHECK(dout["status"] == "MEMBER");
  CHECK(dout["terms"].size() == 1);
  CHECK(dout["terms"][0]["lambda"] ==
        Json::array({"1/2", "-1", "1/2"}));

  const char* not_member = R"({
    "support": {"points": [["0"], ["1"], ["2"]]},
    "x": {"A": [["-1"]], "b": ["0"]},
    "signomial": {"coeffs": [1.0, -2.2, 1.0]}
  })";
  const CliResult neg = cli_run("sage-check", not_member);
  CHECK(neg.exit_code == 0);
  CHECK(Json::parse(neg.output)["status"] == "NOT_MEMBER");
}

TEST_CASE("age-check delegates both verifications") {
  const CliResult res = cli_run("age-check", kHalfLineProblem);
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.output);
  CHECK(out["relent"] == Json::array({true}));
}

TEST_CASE("refine command returns an exact certificate") {
  const char* problem = R"({
    "support": {"points": [["0"], ["1"], ["2"]]},
    "x": {"A": [["-1"]], "b": ["0"]},
    "signomial": {"coeffs": ["1", "-2", "1"]},
    "witnesses": [{"beta": 1, "nu": [0.999, -2.001, 1.002]}]
  })";
  const CliResult res = cli_run("refine", problem);
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.output);
  CHECK(out["terms"].size() == 1);
  CHECK(out["terms"][0]["coeffs"][0].is_string());  // exact path
}

TEST_CASE("univariate and separate commands") {
  const char* classify = R"({
    "support": {"points": [["0"], ["1"], ["2"]]},
    "signomial": {"coeffs": ["1", "-2", "1"]},
    "univariate": {"op": "classify"}
  })";
  CHECK(Json::parse(cli_run("univariate", classify).output)["class"] ==
        "TYPE3");

  const char* extreme = R"({
    "support": {"points": [["0"], ["1"], ["3"]]},
    "univariate": {"op": "extreme", "index": 1, "c_lo": "2", "c_hi": "1"}
  })";
  const Json ext = Json::parse(cli_run("univariate", extreme).output);
  CHECK(ext["coeffs"] == Json::array({"2", "-3", "1"}));
  CHECK(ext["exact"] == true);

  CliOverrides idx;
  idx.circuit_index = 1;
  const Json sep =
      Json::parse(cli_run("separate", kHalfLineProblem, idx).output);
  CHECK(sep.contains("y"));
  CHECK(sep.contains("z"));
  CHECK(sep["target"]["lambda"] == Json::array({"1/2", "-1", "1/2"}));
}

TEST_CASE("polyhedron serialization helpers") {
  const ProblemSpec spec = parse_problem(kHalfLineProblem);
  const Json h = h_polyhedron_to_json(*spec.x);
  CHECK(h["A"] == Json::array({Json::array({"-1"})}));
  CHECK(h["b"] == Json::array({"0"}));

  VPolyhedron v;
  v.dim = 2;
  v.vertices = {{Rational(0), Rational(0)}};
  v.rays = {{Rational(1), Rational(0)}};
  v.lineality = {{Rational(1), Rational(1)}};
  const Json vj = v_polyhedron_to_json(v);
  CHECK(vj["vertices"].size() == 1);
  CHECK(vj["rays"][0] == Json::array({"1", "0"}));
  CHECK(vj["lineality"][0] == Json::array({"1", "1"}));
}

TEST_CASE("byte-identical output for identical input") {
  for (const char* cmd : {"circuits", "reduced", "sage-check", "decompose"}) {
    const CliResult a = cli_run(cmd, kHalfLineProblem);
    const CliResult b = cli_run(cmd, kHalfLineProblem);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("emitted certificates re-validate when fed back") {
  const Json cert = Json::parse(cli_run("decompose", kHalfLineProblem).output);
  REQUIRE(cert["terms"].size() == 1);
  // Feed the witness from the emitted term back through age-check.
  Json doc = Json::parse(kHalfLineProblem);
  Json nu = Json::array();
  // nu = |c_beta| lambda with c_beta = -2.
  nu.push_back("1");
  nu.push_back("-2");
  nu.push_back("1");
  doc["witnesses"] = Json::array({Json{{"beta", 2}, {"nu", nu}}});
  doc["witnesses"][0]["beta"] = cert["terms"][0]["beta"];
  const CliResult back = cli_run("age-check", doc.dump());
  CHECK(back.exit_code == 0);
  CHECK(Json::parse(back.output)["relent"] == Json::array({true}));
}

TEST_CASE("unknown command and missing fields are errors") {
  CHECK(cli_run("bogus", kHalfLineProblem).exit_code == 1);
  CHECK(cli_run("sage-check", R"({"support": {"points": [["0"]]}})").exit_code ==
        1);
  const CliResult err = cli_run("circuits", "{}");
  CHECK(err.exit_code == 1);
  CHECK(Json::parse(err.output).contains("error"));
}
