#include <cmath>

#include "doctest.h"
#include "lcaes/core/problem_builder.hpp"
#include "lcaes/lp/solver.hpp"
#include "lcaes/objectives/objectives.hpp"
#include "oracles.hpp"
#include "scenario_fixtures.hpp"

using namespace lcaes;
using namespace lcaes::objectives;
using core::kPeriods;
using oracle::rel_diff;

namespace {

// Capital recovery as the inverse of the present value of a unit annuity.
double annuity_oracle(double rate, int years) {
  double pv = 0;
  for (int k = 1; k <= years; ++k) pv += 1.0 / std::pow(1.0 + rate, k);
  return 1.0 / pv;
}

}  // namespace

TEST_CASE("annualization factor") {
  CHECK(annualization_factor(0.0, 25) == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(annualization_factor(0.03, 1) == doctest::Approx(1.03).epsilon(1e-15));
  CHECK(annualization_factor(0.03, 25) == doctest::Approx(annuity_oracle(0.03, 25)).epsilon(1e-13));
  CHECK(annualization_factor(0.03, 25) == doctest::Approx(0.057428).epsilon(1e-5));
  for (double r : {0.01, 0.07, 0.15})
    for (int n : {2, 10, 40}) CHECK(rel_diff(annualization_factor(r, n), annuity_oracle(r, n)) < 1e-12);
  CHECK_THROWS_AS(annualization_factor(0.03, 0.5), DomainError);
  CHECK_THROWS_AS(annualization_factor(-0.01, 10), DomainError);
}

TEST_CASE("cost constant part charges investment on new capacity only") {
  auto s = fixtures::single_plant();
  s.discount_rate = 0.05;
  auto& t = s.technologies[0];
  t.c_inv = 1000.0;
  t.c_maint = 10.0;
  t.f_ext = 0.5;
  const double tau = annualization_factor(0.05, t.lifetime);
  auto p = core::build_problem(s);
  std::vector<double> x(p.lp.num_variables(), 0.0);
  x[p.index.size[0]] = 2.0;
  const auto e = cost_objective(s, p.index);
  CHECK(e.evaluate(x) == doctest::Approx(1000.0 * 1.5 * tau + 20.0).epsilon(1e-14));
  const auto b = breakdown(s, p.index, x, "COST");
  REQUIRE(b.rows.size() == 1);
  CHECK(b.rows[0].constant == doctest::Approx(b.total).epsilon(1e-15));
  CHECK(b.rows[0].variable == 0.0);

  x[p.index.size[0]] = 0.5;
  CHECK(e.evaluate(x) == doctest::Approx(10.0 * 0.5).epsilon(1e-14));
}

TEST_CASE("construction impact is spread over the lifetime") {
  auto s = fixtures::single_plant();
  s.technologies[0].lcia_stat.values["CF"] = 500.0;
  auto p = core::build_problem(s);
  std::vector<double> x(p.lp.num_variables(), 0.0);
  x[p.index.size[0]] = 2.0;
  CHECK(lcia_objective(s, p.index, "CF").evaluate(x) == doctest::Approx(40.0).epsilon(1e-15));
  // Linear in F.
  x[p.index.size[0]] = 6.0;
  CHECK(lcia_objective(s, p.index, "CF").evaluate(x) == doctest::Approx(120.0).epsilon(1e-15));
}

TEST_CASE("technology without operation inventory has zero variable impact") {
  auto s = fixtures::single_plant();
  s.technologies[0].lcia_var.status = core::Characterization::kNoInventory;
  s.technologies[0].lcia_stat.values["CF"] = 10.0;
  auto p = core::build_problem(s);
  std::vector<double> x(p.lp.num_variables(), 1.0);
  const auto b = breakdown(s, p.index, x, "CF");
  CHECK(b.rows[0].variable == 0.0);
  CHECK_NOTHROW(lcia_objective(s, p.index, "CF"));
}

TEST_CASE("uncharacterized entities are refused by name") {
  auto s = fixtures::small_system();
  s.technologies[1].lcia_var.status = core::Characterization::kUncharacterized;
  s.resources[0].lcia_var.status = core::Characterization::kUncharacterized;
  auto p = core::build_problem(s);
  try {
    lcia_objective(s, p.index, "CF");
    FAIL("expected MissingCoefficientError");
  } catch (const MissingCoefficientError& e) {
    REQUIRE(e.entities().size() == 2);
    CHECK(e.entities()[0] == "CCGT (operation)");
    CHECK(e.entities()[1] == "GAS_IMPORT");
  }
  CHECK_NOTHROW(cost_objective(s, p.index));
}

TEST_CASE("objective expressions touch only F, F_t and R columns") {
  const auto s = fixtures::small_system();
  auto p = core::build_problem(s);
  for (auto o : kAllObjectives) {
    for (const auto& term : objective_expression(s, p.index, o).terms) {
      const auto& name = p.lp.variable(term.col).name;
      const bool ok = name.rfind("F[", 0) == 0 || name.rfind("F_t[", 0) == 0 || name.rfind("R[", 0) == 0;
      CHECK_MESSAGE(ok, name);
    }
  }
}

TEST_CASE("breakdown closes on solver objectives") {
  const auto s = fixtures::small_system();
  for (auto o : {Objective::kCost, Objective::kCF, Objective::kFNEU}) {
    auto p = core::build_problem(s);
    set_objective(p.lp, objective_expression(s, p.index, o));
    lp::SimplexSolver solver;
    const auto sol = solver.solve(p.lp);
    REQUIRE(sol.status == lp::Status::kOptimal);
    const auto b = breakdown(s, p.index, sol.values, to_string(o));
    double sum = 0;
    for (const auto& r : b.rows) sum += r.constant + r.variable;
    CHECK(rel_diff(sum, b.total) <= 1e-12);
    CHECK(rel_diff(b.total, sol.objective) <= 1e-9);
    CHECK(rel_diff(p.lp.evaluate(sol.values), sol.objective) <= 1e-9);
  }
}

TEST_CASE("catalog lists the optimizable profiles and the reporting categories") {
  CHECK(indicator_catalog().size() == 34);
  CHECK(reporting_categories().size() == 29);
  for (auto o : kImpactObjectives) {
    const auto* ind = find_indicator(to_string(o));
    REQUIRE(ind != nullptr);
    CHECK(ind->group == IndicatorGroup::kImpactProfile);
  }
  CHECK(parse_objective("WSF") == Objective::kWSF);
  CHECK(!parse_objective("TTHH"));
  CHECK(unit_of(Objective::kCost) == "MCHF/yr");
}
