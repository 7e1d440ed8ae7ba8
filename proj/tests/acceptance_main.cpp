// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion is self-contained and uses fixed seeds so
// reruns are reproducible.

#include "sagecirc/certify.hpp"
#include "sagecirc/reduced.hpp"
#include "sagecirc/univariate.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace sagecirc;

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

SortedAlphas random_alphas(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<int> step_num(1, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> alphas;
  Rational cur(-2);
  for (std::size_t i = 0; i < m; ++i) {
    cur += Rational(step_num(rng), den(rng));
    alphas.push_back(cur);
  }
  return make_sorted_alphas(std::move(alphas));
}

std::vector<Circuit> g_seen_circuits;  // collected for the invariant sweep
std::vector<Support> g_seen_supports;

void remember(const Support& s, const std::vector<Circuit>& cs) {
  for (const auto& c : cs) {
    g_seen_circuits.push_back(c);
    g_seen_supports.push_back(s);
  }
}

ReducedSet as_reduced_set(std::vector<Circuit> cs) {
  ReducedSet r;
  r.circuits = std::move(cs);
  for (std::size_t k = 0; k < r.circuits.size(); ++k) r.graph_indices.push_back(k);
  return r;
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// Rejection sampler for exact dual-feasible log points near the moment curve.
RationalVector sample_dual_log(std::mt19937& rng, const Support& s,
                               const std::vector<Circuit>& all) {
  std::uniform_int_distribution<int> xnum(2, 12);
  std::uniform_int_distribution<int> noise(-3, 3);
  while (true) {
    const Rational x(xnum(rng), 4);
    RationalVector y(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
      y[j] = s.points[j][0] * x + Rational(noise(rng), 16);
    if (dual_feasible_log(y, all)) return y;
  }
}

void criterion_1_and_2() {
  std::mt19937 rng(1001);
  std::uniform_int_distribution<std::size_t> msize(2, 6);
  bool circuits_ok = true, reduced_ok = true;
  std::string detail1, detail2;
  for (int trial = 0; trial < 25; ++trial) {
    const SortedAlphas a = random_alphas(rng, msize(rng));
    const Support s = to_support(a);
    const auto engine = enumerate_circuits(s, half_line_domain());
    remember(s, engine);
    const auto closed = univariate_circuits(a);
    const std::size_t m = a.size();
    if (!oracle::same_circuits(engine, closed) ||
        engine.size() != choose(m, 2) + choose(m, 3)) {
      circuits_ok = false;
      detail1 = "mismatch at trial " + std::to_string(trial);
    }
    const ReducedSet red = reduced_circuits(build_circuit_graph(engine));
    if (!oracle::same_circuits(red.circuits, univariate_reduced(a)) ||
        red.circuits.size() != m - 1) {
      reduced_ok = false;
      detail2 = "mismatch at trial " + std::to_string(trial);
    }
  }
  report(1, "univariate circuit oracle equivalence (25 instances)", circuits_ok,
         detail1);
  report(2, "reduced-set equivalence (25 instances)", reduced_ok, detail2);
}

void criterion_3() {
  const Support s = make_support({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}});
  HPolyhedron x;
  x.dim = 2;
  x.A = RationalMatrix{{q(-1), q(0)}, {q(0), q(-1)}};
  x.b = {q(-1), q(-1)};
  const auto circuits = enumerate_circuits(s, x, 0);
  remember(s, circuits);
  bool ok = circuits.size() == 2;
  const RationalVector first{q(-1), q(1), q(0)};
  const RationalVector second{q(-1), q(0), q(1)};
  if (ok) {
    ok = (circuits[0].lambda == first && circuits[1].lambda == second) ||
         (circuits[0].lambda == second && circuits[1].lambda == first);
  }
  ok = ok && !is_circuit(s, x, {q(-2), q(1), q(1)});
  report(3, "shifted-orthant circuits and decomposable direction", ok);
}

void criterion_4() {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<std::size_t> dim_pick(1, 3);
  std::uniform_int_distribution<std::size_t> msize(2, 6);
  bool ok = true;
  std::string detail;
  int done = 0;
  while (done < 10) {
    const std::size_t n = dim_pick(rng);
    const std::size_t m = msize(rng);
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector p(n);
      for (auto& v : p) v = Rational(num(rng), den(rng));
      pts.push_back(p);
    }
    Support s;
    try {
      s = make_support(pts);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto fast = enumerate_circuits(s, HPolyhedron::whole_space(n));
    remember(s, fast);
    if (!oracle::same_circuits(fast, oracle::brute_force_free_circuits(s))) {
      ok = false;
      detail = "mismatch at instance " + std::to_string(done);
    }
    ++done;
  }
  report(4, "free-space equivalence with the brute-force subset oracle", ok,
         detail);
}

void criterion_5() {
  bool ok = !g_seen_circuits.empty();
  std::string detail;
  for (std::size_t i = 0; i < g_seen_circuits.size(); ++i) {
    try {
      check_circuit_invariants(g_seen_supports[i], g_seen_circuits[i]);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
      break;
    }
  }
  report(5, "circuit invariants across all enumerated circuits (" +
                std::to_string(g_seen_circuits.size()) + " circuits)",
         ok, detail);
}

void criterion_6() {
  const SortedAlphas a = make_sorted_alphas({q(0), q(1), q(2)});
  const Support s = to_support(a);
  const ReducedSet r = as_reduced_set(univariate_reduced(a));
  bool ok = true;
  std::string detail;

  const Signomial boundary = make_signomial(s, RationalVector{q(1), q(-2), q(1)});
  const MembershipResult mem = sage_membership(boundary, r);
  if (mem.status != MembershipStatus::MEMBER || !mem.decomposition ||
      mem.decomposition->terms.size() != 1) {
    ok = false;
    detail = "boundary membership not recovered with a single witness";
  } else {
    const auto& term = mem.decomposition->terms[0];
    if (term.circuit.lambda != RationalVector{q(1, 2), q(-1), q(1, 2)}) {
      ok = false;
      detail = "wrong witness circuit";
    }
    // Equality in the witnessed inequality, log domain.
    const double lhs = 0.5 * (std::log(term.coeffs[0]) - std::log(0.5)) +
                       0.5 * (std::log(term.coeffs[2]) - std::log(0.5));
    const double rhs = std::log(-term.coeffs[1]);
    if (std::abs(lhs - rhs) > 1e-8) {
      ok = false;
      detail = "boundary equality residual " + std::to_string(lhs - rhs);
    }
  }
  AGEWitness w;
  w.beta = 1;
  w.nu = {1.0, -2.0, 1.0};
  w.nu_exact = RationalVector{q(1), q(-2), q(1)};
  if (!check_relent_certificate(boundary, w, half_line_domain())) {
    ok = false;
    detail = "relative-entropy certificate rejected";
  }

  const Signomial deeper =
      make_signomial(s, std::vector<double>{1.0, -2.2, 1.0});
  const MembershipResult neg = sage_membership(deeper, r);
  if (neg.status != MembershipStatus::NOT_MEMBER || neg.slack > -1e-3) {
    ok = false;
    detail = "expected NOT_MEMBER with slack <= -1e-3, slack = " +
             std::to_string(neg.slack);
  }
  const double gm = grid_min(deeper, {{0.0}, {1.0}, 100001});
  if (std::abs(gm - (-0.21)) > 1e-3) {
    ok = false;
    detail = "grid minimum " + std::to_string(gm);
  }
  report(6, "boundary certificate and refuted near-member", ok, detail);
}

void criterion_7() {
  const SortedAlphas a = make_sorted_alphas({q(0), q(1), q(2)});
  const Support s = to_support(a);
  const Signomial f = make_signomial(s, RationalVector{q(-1), q(1), q(0)});

  const ReducedSet half = as_reduced_set(univariate_reduced(a));
  const auto free_circuits = enumerate_circuits(s, HPolyhedron::whole_space(1));
  const ReducedSet global =
      reduced_circuits(build_circuit_graph(free_circuits));

  const bool ok =
      sage_membership(f, half).status == MembershipStatus::MEMBER &&
      sage_membership(f, global).status == MembershipStatus::NOT_MEMBER;
  report(7, "conditional versus global separation of exp(x) - 1", ok);
}

void criterion_8() {
  std::mt19937 rng(1008);
  bool ok = true;
  std::string detail;
  for (const std::size_t m : {std::size_t(3), std::size_t(4)}) {
    std::vector<Rational> alpha_list;
    for (std::size_t i = 0; i < m; ++i) alpha_list.push_back(q(i));
    const SortedAlphas a = make_sorted_alphas(alpha_list);
    const Support s = to_support(a);
    const auto all = enumerate_circuits(s, half_line_domain());
    const ReducedSet r = reduced_circuits(build_circuit_graph(all));

    for (const auto& target : r.circuits) {
      RationalVector y;
      try {
        y = minimality_witness(r, target);
      } catch (const std::exception& e) {
        ok = false;
        detail = std::string("witness LP failed: ") + e.what();
        continue;
      }
      const Rational u_exact = evaluate_form(functional_form(target), y);
      if (u_exact >= 0) {
        ok = false;
        detail = "witness does not separate";
        continue;
      }
      for (const auto& other : r.circuits) {
        if (other == target) continue;
        if (evaluate_form(functional_form(other), y) < 0) {
          ok = false;
          detail = "witness violates a sibling inequality";
        }
      }
      const double u = static_cast<double>(u_exact);
      const std::vector<double> z = separating_functional(y, target);
      double z_dot_exp = 0;
      for (std::size_t j = 0; j < m; ++j)
        z_dot_exp += z[j] * std::exp(static_cast<double>(y[j]));
      if (std::abs(z_dot_exp - (1.0 - std::exp(-u))) > 1e-10) {
        ok = false;
        detail = "exponentiated identity off by " +
                 std::to_string(z_dot_exp - (1.0 - std::exp(-u)));
      }
      for (int sample = 0; sample < 100; ++sample) {
        const RationalVector ylog = sample_dual_log(rng, s, all);
        double dot_v = 0;
        for (std::size_t j = 0; j < m; ++j)
          dot_v += z[j] * std::exp(static_cast<double>(ylog[j]));
        if (dot_v < -1e-10) {
          ok = false;
          detail = "separator negative on a dual point: " + std::to_string(dot_v);
        }
      }
    }
  }
  report(8, "minimality witnesses and exponentiated separators (m=3,4)", ok,
         detail);
}

void criterion_9() {
  std::mt19937 rng(1009);
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (const Rational& lo : {Rational(0), Rational(1, 2)}) {
    HPolyhedron x;
    x.dim = 1;
    x.A = RationalMatrix{{q(-1)}};
    x.b = {-lo};
    const Support s =
        make_support({{q(0)}, {q(1)}, {q(2)}, {q(3)}});
    const auto all = enumerate_circuits(s, x);
    for (int pair = 0; pair < 500; ++pair) {
      const RationalVector y1 = sample_dual_log(rng, s, all);
      const RationalVector y2 = sample_dual_log(rng, s, all);
      const RationalVector mid = scale(add(y1, y2), q(1, 2));
      if (!dual_feasible_log(mid, all)) {
        ok = false;
        detail = "geometric mean left the dual cone";
      }
      ++checked;
    }
  }
  report(9, "log convexity of the dual over " + std::to_string(checked) +
                " random pairs",
         ok, detail);
}

void criterion_10() {
  std::mt19937 rng(1010);
  std::uniform_int_distribution<int> cnum(1, 8);
  std::uniform_int_distribution<int> cden(1, 2);
  std::uniform_int_distribution<int> extra_num(0, 4);
  bool ok = true;
  std::string detail;

  int valid_done = 0;
  while (valid_done < 50 && ok) {
    const SortedAlphas a = random_alphas(rng, 3 + valid_done % 4);
    std::uniform_int_distribution<std::size_t> ipick(1, a.size() - 2);
    const std::size_t i = ipick(rng);
    const Rational span = a.alphas[i + 1] - a.alphas[i - 1];
    const Rational w_lo = (a.alphas[i + 1] - a.alphas[i]) / span;
    const Rational w_hi = (a.alphas[i] - a.alphas[i - 1]) / span;
    const Rational c_hi(cnum(rng), cden(rng));
    // Ratio condition with a controlled surplus factor in [1, 2].
    const Rational surplus = Rational(1) + Rational(extra_num(rng), 4);
    const Rational c_lo = c_hi * (w_lo / w_hi) * surplus;

    Signomial f;
    try {
      f = extreme_generator(a, i, c_lo, c_hi);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("valid generator rejected: ") + e.what();
      break;
    }
    if (classify_extreme(f, a) != ExtremeClass::TYPE3) {
      ok = false;
      detail = "generator not classified TYPE3 at instance " +
               std::to_string(valid_done);
      break;
    }
    const MembershipResult res =
        sage_membership(f, as_reduced_set(univariate_reduced(a)));
    if (res.status != MembershipStatus::MEMBER || std::abs(res.slack) > 1e-6) {
      ok = false;
      detail = "membership slack " + std::to_string(res.slack);
      break;
    }
    if (grid_min(f, {{0.0}, {50.0}, 20001}) < -1e-9) {
      ok = false;
      detail = "grid minimum fell below -1e-9";
      break;
    }
    ++valid_done;
  }

  int rejected = 0;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    const SortedAlphas a = random_alphas(rng, 3 + trial % 4);
    std::uniform_int_distribution<std::size_t> ipick(1, a.size() - 2);
    const std::size_t i = ipick(rng);
    const Rational span = a.alphas[i + 1] - a.alphas[i - 1];
    const Rational w_lo = (a.alphas[i + 1] - a.alphas[i]) / span;
    const Rational w_hi = (a.alphas[i] - a.alphas[i - 1]) / span;
    const Rational c_hi(cnum(rng), cden(rng));
    const Rational shrink = Rational(1, 2);  // strictly violates the ratio
    const Rational c_lo = c_hi * (w_lo / w_hi) * shrink;
    try {
      extreme_generator(a, i, c_lo, c_hi);
      ok = false;
      detail = "ratio-violating input accepted";
    } catch (const std::invalid_argument&) {
      ++rejected;
    }
  }
  ok = ok && rejected == 20;
  report(10, "extreme generator round trip (50 valid, 20 rejected)", ok, detail);
}

void criterion_11() {
  std::mt19937 rng(1011);
  std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
  const SortedAlphas a = make_sorted_alphas({q(0), q(1), q(2), q(3)});
  const Support s = to_support(a);
  const RationalVector c{q(1), q(-1), q(-1), q(1)};
  const Signomial f = make_signomial(s, c);
  const auto circuits = enumerate_circuits(s, half_line_domain());

  // Exact witnesses of the two boundary terms.
  const RationalVector nu1{q(1), q(-2), q(1), q(0)};
  const RationalVector nu2{q(0), q(1), q(-2), q(1)};

  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 10 && ok; ++trial) {
    std::vector<AGEWitness> witnesses;
    for (const RationalVector* nu : {&nu1, &nu2}) {
      AGEWitness w;
      w.beta = (nu == &nu1) ? 1 : 2;
      for (const auto& x : *nu)
        w.nu.push_back(static_cast<double>(x) + noise(rng));
      witnesses.push_back(std::move(w));
    }
    SageDecomposition dec;
    try {
      dec = refine_certificate(f, circuits, witnesses);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("refinement failed: ") + e.what();
      break;
    }
    if (dec.terms.size() != 2 || !dec.exact_residual) {
      ok = false;
      detail = "unexpected decomposition shape";
      break;
    }
    RationalVector total = *dec.exact_residual;
    for (const auto& x : *dec.exact_residual)
      if (x < 0) {
        ok = false;
        detail = "negative exact residual";
      }
    for (const auto& term : dec.terms) {
      if (!term.exact_coeffs) {
        ok = false;
        detail = "missing exact coefficients";
        break;
      }
      total = add(total, *term.exact_coeffs);
      const double violation = age_log_violation(term.coeffs, term.circuit);
      if (violation > 1e-12) {
        ok = false;
        detail = "per-term residual " + std::to_string(violation);
      }
    }
    if (total != c) {
      ok = false;
      detail = "exact reconstruction failed";
    }
  }
  report(11, "refinement of noisy witnesses on the m=4 instance", ok, detail);
}

}  // namespace

int main() {
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
