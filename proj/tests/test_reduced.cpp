#include "doctest.h"

#include "sagecirc/reduced.hpp"

#include <cmath>
#include <random>

using namespace sagecirc;

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

Support support_012() { return make_support({{q(0)}, {q(1)}, {q(2)}}); }

HPolyhedron half_line() {
  HPolyhedron h;
  h.dim = 1;
  h.A = RationalMatrix{{q(-1)}};
  h.b = {q(0)};
  return h;
}

bool has_lambda(const std::vector<Circuit>& cs, const RationalVector& lambda) {
  for (const auto& c : cs)
    if (c.lambda == lambda) return true;
  return false;
}

// Rejection-samples y near the log-moment curve until it satisfies every
// circuit inequality exactly.
RationalVector sample_dual_log_point(std::mt19937& rng,
                                     const Support& s,
                                     const std::vector<Circuit>& all) {
  std::uniform_int_distribution<int> xnum(0, 40);
  std::uniform_int_distribution<int> noise(-2, 2);
  while (true) {
    const Rational x(xnum(rng), 4);
    RationalVector y(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
      y[j] = s.points[j][0] * x + Rational(noise(rng), 8);
    if (dual_feasible_log(y, all)) return y;
  }
}

}  // namespace

TEST_CASE("circuit graph sizes") {
  const auto circuits = enumerate_circuits(support_012(), half_line());
  const CircuitGraph g = build_circuit_graph(circuits);
  CHECK(g.circuits.size() == 4);
  CHECK(g.generators().size() == 5);
  CHECK(g.generators().back() == RationalVector{q(0), q(0), q(0), q(1)});

  const CircuitGraph empty_graph = build_circuit_graph({}, 3);
  CHECK(empty_graph.circuits.empty());
  CHECK(empty_graph.generators().size() == 1);

  const auto free_circuits =
      enumerate_circuits(support_012(), HPolyhedron::whole_space(1));
  CHECK(build_circuit_graph(free_circuits).generators().size() == 2);
}

TEST_CASE("a line through opposite functional forms is rejected") {
  // Two normalized vectors whose forms sum to zero span a line, which the
  // graph construction must refuse (it would have no extreme rays).
  Circuit forward;
  forward.lambda = {q(-1), q(1)};
  forward.beta = 0;
  forward.sigma = 0;
  Circuit backward;
  backward.lambda = {q(1), q(-1)};
  backward.beta = 1;
  backward.sigma = 0;
  CHECK_THROWS_AS(build_circuit_graph({forward, backward}), std::logic_error);
}

TEST_CASE("reduced circuits of the m=3 half-line instance") {
  const auto circuits = enumerate_circuits(support_012(), half_line());
  const ReducedSet r = reduced_circuits(build_circuit_graph(circuits));
  REQUIRE(r.circuits.size() == 2);
  CHECK(has_lambda(r.circuits, {q(-1), q(1), q(0)}));
  CHECK(has_lambda(r.circuits, {q(1, 2), q(-1), q(1, 2)}));
  // delta_3 - delta_2 decomposes through the three-term circuits.
  CHECK_FALSE(has_lambda(r.circuits, {q(0), q(-1), q(1)}));
}

TEST_CASE("a single-circuit graph is reduced") {
  const auto circuits =
      enumerate_circuits(support_012(), HPolyhedron::whole_space(1));
  const ReducedSet r = reduced_circuits(build_circuit_graph(circuits));
  REQUIRE(r.circuits.size() == 1);
  CHECK(r.circuits[0].lambda == RationalVector{q(1, 2), q(-1), q(1, 2)});
}

TEST_CASE("minimality witness separates each reduced circuit") {
  const auto circuits = enumerate_circuits(support_012(), half_line());
  const ReducedSet r = reduced_circuits(build_circuit_graph(circuits));
  for (const auto& target : r.circuits) {
    const RationalVector y = minimality_witness(r, target);
    CHECK(evaluate_form(functional_form(target), y) <= q(-1));
    for (const auto& other : r.circuits) {
      if (other == target) continue;
      CHECK(evaluate_form(functional_form(other), y) >= 0);
    }
  }

  Circuit bogus;  // not a member of the reduced set
  bogus.lambda = {q(0), q(-1), q(1)};
  bogus.beta = 1;
  bogus.sigma = 0;
  CHECK_THROWS_AS(minimality_witness(r, bogus), std::invalid_argument);
}

TEST_CASE("separating functional identities") {
  Circuit target;
  target.lambda = {q(1, 2), q(-1), q(1, 2)};
  target.beta = 1;
  target.sigma = 0;
  const RationalVector y{q(0), q(0), q(-2)};
  const Rational u = evaluate_form(functional_form(target), y);
  CHECK(u == q(-1));
  const std::vector<double> z = separating_functional(y, target);
  CHECK(z[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(-std::exp(1.0)).epsilon(1e-15));
  CHECK(z[2] == doctest::Approx(std::exp(2.0) / 2).epsilon(1e-15));
  // z . exp(y) = 1 - e^{-u}
  double dot_exp = 0;
  for (std::size_t j = 0; j < 3; ++j)
    dot_exp += z[j] * std::exp(static_cast<double>(y[j]));
  CHECK(dot_exp == doctest::Approx(1.0 - std::exp(1.0)).epsilon(1e-12));
  // Against the moment vector at x = 0.
  const double against_ones = z[0] + z[1] + z[2];
  const double e = std::exp(1.0);
  CHECK(against_ones == doctest::Approx((e - 1) * (e - 1) / 2).epsilon(1e-12));
  CHECK(against_ones > 0);

  CHECK_THROWS_AS(separating_functional({q(0), q(0), q(0)}, target),
                  std::invalid_argument);
}

TEST_CASE("reduction soundness: finite combinations never hit a reduced form") {
  const auto circuits = enumerate_circuits(support_012(), half_line());
  const CircuitGraph g = build_circuit_graph(circuits);
  const ReducedSet r = reduced_circuits(g);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> w(0, 3);
  const auto gens = g.generators();
  for (const auto& idx : r.graph_indices) {
    for (int trial = 0; trial < 200; ++trial) {
      RationalVector combo(g.ambient + 1);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == idx) continue;
        combo = add(combo, scale(gens[j], q(w(rng), 2)));
      }
      CHECK(combo != gens[idx]);
    }
  }
}

TEST_CASE("reduced dual system equals the full dual system on samples") {
  const Support s = make_support({{q(0)}, {q(1)}, {q(2)}, {q(3)}});
  const auto all = enumerate_circuits(s, half_line());
  const ReducedSet r = reduced_circuits(build_circuit_graph(all));
  CHECK(r.circuits.size() == 3);  // m - 1

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-6, 6);
  int agree_checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    RationalVector y(s.size());
    for (auto& v : y) v = Rational(num(rng), 4);
    const bool full = dual_feasible_log(y, all);
    const bool reduced_only = dual_feasible_log(y, r.circuits);
    CHECK(full == reduced_only);
    if (full) ++agree_checked;
  }
  CHECK(agree_checked > 0);  // the sample actually exercised feasible points
}

TEST_CASE("log convexity of the dual feasible set") {
  const Support s = make_support({{q(0)}, {q(1)}, {q(2)}, {q(3)}});
  const auto all = enumerate_circuits(s, half_line());
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalVector y1 = sample_dual_log_point(rng, s, all);
    const RationalVector y2 = sample_dual_log_point(rng, s, all);
    const RationalVector mid = scale(add(y1, y2), q(1, 2));
    CHECK(dual_feasible_log(mid, all));
  }
}
