#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lcaes/lp/problem_io.hpp"
#include "lcaes/lp/solver.hpp"
#include "oracles.hpp"
#include "lp_fixtures.hpp"

using namespace lcaes::lp;

TEST_CASE("one-variable LP attains its upper row") {
  Problem p;
  const int x = p.add_variable("x", 0.0, kInf, -1.0);
  p.add_row("cap", {{x, 1.0}}, RowSense::kLessEqual, 4.0);
  SimplexSolver s;
  const auto sol = s.solve(p);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.values[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(sol.objective == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("2x2 transport problem matches hand-enumerated vertex") {
  // Vertices of the feasible segment are x11 = 0 (cost 390) and x11 = 20 (cost 310).
  const Problem p = fixtures::transport_2x2();
  SimplexSolver s;
  const auto sol = s.solve(p);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.objective == doctest::Approx(310.0).epsilon(1e-12));
  CHECK(sol.values[0] == doctest::Approx(20.0));
  CHECK(sol.values[1] == doctest::Approx(0.0));
  CHECK(sol.values[2] == doctest::Approx(5.0));
  CHECK(sol.values[3] == doctest::Approx(25.0));
}

TEST_CASE("infeasible and unbounded are statuses") {
  SimplexSolver s;
  CHECK(s.solve(fixtures::infeasible_lp()).status == Status::kInfeasible);
  CHECK(s.solve(fixtures::unbounded_lp()).status == Status::kUnbounded);

  Problem both_eq;
  const int x = both_eq.add_variable("x", 0, 10, 1.0);
  both_eq.add_row("a", {{x, 1.0}}, RowSense::kEqual, 2.0);
  both_eq.add_row("b", {{x, 1.0}}, RowSense::kEqual, 3.0);
  CHECK(s.solve(both_eq).status == Status::kInfeasible);
}

TEST_CASE("problem without rows") {
  Problem p;
  p.add_variable("x", -2.0, 5.0, 1.0);
  p.add_variable("y", -kInf, 3.0, -2.0);
  SimplexSolver s;
  const auto sol = s.solve(p);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(sol.values[0] == -2.0);
  CHECK(sol.values[1] == 3.0);
  CHECK(sol.objective == doctest::Approx(-8.0));

  Problem free;
  free.add_variable("z", -kInf, kInf, 1.0);
  CHECK(s.solve(free).status == Status::kUnbounded);
}

TEST_CASE("free variables and greater-equal rows") {
  Problem p;
  const int x = p.add_variable("x", -kInf, kInf, 1.0);
  const int y = p.add_variable("y", -kInf, kInf, 1.0);
  p.add_row("r1", {{x, 1.0}, {y, -1.0}}, RowSense::kGreaterEqual, -2.0);
  p.add_row("r2", {{x, 1.0}, {y, 2.0}}, RowSense::kGreaterEqual, 1.0);
  p.add_row("r3", {{x, 2.0}, {y, 1.0}}, RowSense::kGreaterEqual, 1.0);
  SimplexSolver s;
  const auto sol = s.solve(p);
  REQUIRE(sol.status == Status::kOptimal);
  // r2 and r3 tight: x = y = 1/3.
  CHECK(sol.objective == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("random bounded LPs agree with vertex enumeration") {
  std::mt19937_64 rng(7);
  SimplexSolver s;
  for (int k = 0; k < 40; ++k) {
    const Problem p = fixtures::random_bounded_lp(rng, 3 + k % 2, 3 + k % 3);
    const auto expect = oracle::enumerate_vertices(p);
    const auto sol = s.solve(p);
    REQUIRE(expect.feasible);
    REQUIRE(sol.status == Status::kOptimal);
    CHECK(oracle::rel_diff(sol.objective, expect.objective) <= 1e-9);
  }
}

TEST_CASE("optimality certificate: reduced costs have the right sign") {
  std::mt19937_64 rng(11);
  SimplexSolver s;
  for (int k = 0; k < 20; ++k) {
    const Problem p = fixtures::random_bounded_lp(rng, 6, 5);
    const auto sol = s.solve(p);
    REQUIRE(sol.status == Status::kOptimal);
    for (int j = 0; j < p.num_variables(); ++j) {
      const double scale = 1e-9 * std::max(1.0, std::abs(p.variable(j).cost)) * 10;
      if (sol.basis.status[j] == VarStatus::kAtLower) CHECK(sol.reduced_costs[j] >= -scale);
      if (sol.basis.status[j] == VarStatus::kAtUpper) CHECK(sol.reduced_costs[j] <= scale);
    }
    for (int i = 0; i < p.num_rows(); ++i) {
      const auto& r = p.row(i);
      const double act = p.activity(i, sol.values);
      const double tol = 1e-7 * std::max(1.0, std::abs(r.rhs));
      if (r.sense == RowSense::kLessEqual) CHECK(act <= r.rhs + tol);
      if (r.sense == RowSense::kGreaterEqual) CHECK(act >= r.rhs - tol);
    }
  }
}

TEST_CASE("identical inputs give bitwise identical solutions") {
  std::mt19937_64 rng(3);
  const Problem p = fixtures::random_bounded_lp(rng, 8, 6);
  SimplexSolver a, b;
  const auto s1 = a.solve(p);
  const auto s2 = b.solve(p);
  REQUIRE(s1.status == Status::kOptimal);
  CHECK(s1.values == s2.values);
  CHECK(s1.objective == s2.objective);
  CHECK(s1.iterations == s2.iterations);
}

TEST_CASE("warm start from own optimal basis takes no pivots") {
  std::mt19937_64 rng(5);
  const Problem p = fixtures::random_bounded_lp(rng, 8, 6);
  SimplexSolver s;
  const auto cold = s.solve(p);
  REQUIRE(cold.status == Status::kOptimal);
  const auto warm = s.warm_start(p, cold.basis);
  CHECK(warm.iterations == 0);
  CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-12));
  CHECK_FALSE(warm.warm_start_fallback);
}

TEST_CASE("stale basis after rhs change reoptimizes to the cold optimum") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    Problem p = fixtures::random_bounded_lp(rng, 6, 5);
    SimplexSolver s;
    const auto first = s.solve(p);
    REQUIRE(first.status == Status::kOptimal);
    for (int i = 0; i < p.num_rows(); ++i) p.set_rhs(i, p.row(i).rhs * 0.7 + 0.1 * i);
    const auto cold = s.solve(p);
    const auto warm = s.warm_start(p, first.basis);
    REQUIRE(warm.status == cold.status);
    if (cold.status == Status::kOptimal) {
      CHECK(oracle::rel_diff(warm.objective, cold.objective) <= 1e-9);
    }
  }
}

TEST_CASE("invalid basis falls back to a cold solve") {
  const Problem p = fixtures::transport_2x2();
  SimplexSolver s;
  Basis bad;
  bad.status.assign(3, VarStatus::kBasic);
  const auto sol = s.warm_start(p, bad);
  CHECK(sol.warm_start_fallback);
  CHECK(sol.objective == doctest::Approx(310.0));

  // Right size, but every structural basic: singular for this problem.
  Basis singular;
  singular.status.assign(p.num_variables() + p.num_rows(), VarStatus::kAtLower);
  for (int j = 0; j < 4; ++j) singular.status[j] = VarStatus::kBasic;
  const auto sol2 = s.warm_start(p, singular);
  CHECK(sol2.status == Status::kOptimal);
  CHECK(sol2.objective == doctest::Approx(310.0));
}

TEST_CASE("degenerate LP terminates") {
  // Klee-Minty-like degenerate vertex at the origin with many tight rows.
  Problem p;
  const int n = 6;
  for (int j = 0; j < n; ++j) p.add_variable("x" + std::to_string(j), 0, kInf, -1.0 - j);
  for (int i = 0; i < 12; ++i) {
    std::vector<Entry> e;
    for (int j = 0; j < n; ++j) e.push_back({j, ((i + j) % 3) - 0.5});
    p.add_row("d" + std::to_string(i), e, RowSense::kLessEqual, 0.0);
  }
  std::vector<Entry> cap;
  for (int j = 0; j < n; ++j) cap.push_back({j, 1.0});
  p.add_row("cap", cap, RowSense::kLessEqual, 1.0);
  SimplexSolver s;
  const auto sol = s.solve(p);
  CHECK(sol.status == Status::kOptimal);
}

TEST_CASE("branch and bound solves a small knapsack exactly") {
  // max 5a + 4b + 3c s.t. 2a + 3b + c <= 5, 4a + b + 2c <= 11, 3a + 4b + 2c <= 8, integer
  // Brute force over a,b,c in [0,5]: optimum 13 at (2,0,1).
  Problem p;
  const int a = p.add_variable("a", 0, 5, -5.0, true);
  const int b = p.add_variable("b", 0, 5, -4.0, true);
  const int c = p.add_variable("c", 0, 5, -3.0, true);
  p.add_row("r1", {{a, 2}, {b, 3}, {c, 1}}, RowSense::kLessEqual, 5);
  p.add_row("r2", {{a, 4}, {b, 1}, {c, 2}}, RowSense::kLessEqual, 11);
  p.add_row("r3", {{a, 3}, {b, 4}, {c, 2}}, RowSense::kLessEqual, 8);
  double best = 0;
  for (int x = 0; x <= 5; ++x)
    for (int y = 0; y <= 5; ++y)
      for (int z = 0; z <= 5; ++z)
        if (2 * x + 3 * y + z <= 5 && 4 * x + y + 2 * z <= 11 && 3 * x + 4 * y + 2 * z <= 8)
          best = std::max(best, 5.0 * x + 4.0 * y + 3.0 * z);
  SimplexSolver s;
  const auto sol = s.solve(p);
  REQUIRE(sol.status == Status::kOptimal);
  CHECK(-sol.objective == doctest::Approx(best));
  for (double v : sol.values) CHECK(v == std::round(v));
}

TEST_CASE("branch and bound never branches on continuous problems") {
  SimplexSolver s;
  const auto sol = branch_and_bound(fixtures::transport_2x2(), s.options());
  CHECK(sol.nodes == 1);
}

TEST_CASE("integer infeasibility is reported") {
  Problem p;
  const int x = p.add_variable("x", 0, 10, 1.0, true);
  p.add_row("lo", {{x, 1.0}}, RowSense::kGreaterEqual, 1.2);
  p.add_row("hi", {{x, 1.0}}, RowSense::kLessEqual, 1.8);
  SimplexSolver s;
  CHECK(s.solve(p).status == Status::kInfeasible);
}

TEST_CASE("problem dump round-trips exactly") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 5; ++k) {
    Problem p = fixtures::random_bounded_lp(rng, 5, 4);
    p.set_bounds(0, -kInf, 3.25);
    p.set_objective_offset(0.1 * k + 1.0 / 3.0);
    std::ostringstream a;
    dump(p, a);
    std::istringstream in(a.str());
    const Problem q = load(in);
    std::ostringstream b;
    dump(q, b);
    CHECK(a.str() == b.str());
    SimplexSolver s;
    CHECK(s.solve(p).objective == s.solve(q).objective);
  }
}

TEST_CASE("structural errors") {
  Problem p;
  p.add_variable("x", 1.0, 0.0);
  CHECK_THROWS_AS(p.check(), StructuralError);
  Problem q;
  q.add_variable("x", 0.0, 1.0);
  q.add_row("r", {{3, 1.0}}, RowSense::kLessEqual, 1.0);
  CHECK_THROWS_AS(q.check(), StructuralError);
}

TEST_CASE("iteration cap from the environment") {
  setenv("LCAES_MAX_ITERATIONS", "1", 1);
  const auto opts = SolverOptions::from_environment();
  unsetenv("LCAES_MAX_ITERATIONS");
  CHECK(opts.max_iterations == 1);
  SimplexSolver s(opts);
  CHECK_THROWS_AS(s.solve(fixtures::transport_2x2()), NumericalError);
}
