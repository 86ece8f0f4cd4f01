#include <algorithm>
#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "lcaes/core/problem_builder.hpp"
#include "lcaes/core/scenario_io.hpp"
#include "lcaes/core/validate.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"
#include "lcaes/lp/solver.hpp"
#include "lcaes/objectives/objectives.hpp"
#include "scenario_fixtures.hpp"

using namespace lcaes;
using namespace lcaes::core;
namespace fs = std::filesystem;

namespace {

bool has_rule(const std::vector<Diagnostic>& d, const std::string& rule) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.rule == rule; });
}

lp::Solution solve_cost(const Scenario& s, OptimizationProblem& p) {
  objectives::set_objective(p.lp, objectives::cost_objective(s, p.index));
  lp::SimplexSolver solver;
  return solver.solve(p.lp);
}

}  // namespace

TEST_CASE("calendar hours cover a non-leap year") {
  const auto h = calendar_month_hours();
  double total = 0;
  for (double v : h) total += v;
  CHECK(total == 8760.0);
  CHECK(h[1] == 672.0);
}

TEST_CASE("validator accepts a consistent scenario") {
  CHECK(validate_scenario(fixtures::single_plant()).empty());
  CHECK(validate_scenario(fixtures::small_system()).empty());
}

TEST_CASE("validator names unproducible layers and excess existing capacity") {
  auto s = fixtures::single_plant();
  s.layers.push_back({"HEAT", Unit::kGWh, ""});
  s.demands.push_back(fixtures::flat_demand("HEAT", 5.0));
  s.technologies[0].f_ext = 200.0;
  const auto d = validate_scenario(s);
  CHECK(has_rule(d, "unproducible layer"));
  CHECK(has_rule(d, "existing exceeds potential"));
  for (const auto& x : d) CHECK(!x.entity.empty());
}

TEST_CASE("validator checks periods, shares and cross references") {
  auto s = fixtures::single_plant();
  s.periods.pop_back();
  s.demands[0].monthly_shares[0] = 0.5;
  s.technologies[0].conversion["NOWHERE"] = -1.0;
  s.unresolved_storage.push_back("GHOST");
  const auto d = validate_scenario(s);
  CHECK(has_rule(d, "expected 12 periods"));
  CHECK(has_rule(d, "monthly shares do not sum to 1"));
  CHECK(has_rule(d, "unknown layer"));
  CHECK(has_rule(d, "unknown technology"));
}

TEST_CASE("single plant closes a flat demand at the peak rate") {
  const auto s = fixtures::single_plant(12.0);
  auto p = build_problem(s);
  const auto sol = solve_cost(s, p);
  REQUIRE(sol.status == lp::Status::kOptimal);
  double peak = 0;
  for (const auto& per : s.periods) peak = std::max(peak, 1.0 / per.hours);
  CHECK(sol.values[p.index.size[0]] == doctest::Approx(peak).epsilon(1e-9));
}

TEST_CASE("zero demand installs nothing beyond existing capacity") {
  auto s = fixtures::single_plant(0.0);
  s.technologies[0].f_ext = 3.0;
  s.technologies[0].c_maint = 2.0;
  auto p = build_problem(s);
  const auto sol = solve_cost(s, p);
  REQUIRE(sol.status == lp::Status::kOptimal);
  CHECK(sol.values[p.index.size[0]] == doctest::Approx(3.0));
  CHECK(sol.objective == doctest::Approx(6.0));
}

TEST_CASE("a layer outside every constraint is a structural error") {
  auto s = fixtures::single_plant();
  s.layers.push_back({"UNUSED", Unit::kGWh, ""});
  CHECK_THROWS_AS(build_problem(s), lp::StructuralError);
}

TEST_CASE("solved system respects balance, capacity and storage cyclicity") {
  const auto s = fixtures::small_system();
  auto p = build_problem(s);
  const auto sol = solve_cost(s, p);
  REQUIRE(sol.status == lp::Status::kOptimal);
  const auto& x = sol.values;
  const auto res = balance_residuals(s, p, x);
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    for (int t = 0; t < kPeriods; ++t) {
      const double demand = s.demand_rate(s.layers[l].id, t);
      CHECK(std::abs(res[l][t]) <= 1e-6 * std::max(1.0, demand));
    }
  }
  for (std::size_t k = 0; k < s.technologies.size(); ++k) {
    const auto& t = s.technologies[k];
    const double rate = t.is_storage() ? 1.0 / t.storage->hours : 1.0;
    for (int q = 0; q < kPeriods; ++q) {
      CHECK(x[p.index.use[k][q]] <= t.capacity_factor[q] * rate * x[p.index.size[k]] + 1e-9);
    }
    if (!t.is_storage()) continue;
    // Re-integrate the state of charge over the year and require it to close.
    double soc = x[p.index.state[k][kPeriods - 1]];
    const double start = soc;
    for (int q = 0; q < kPeriods; ++q) {
      const double h = s.periods[q].hours;
      soc += h * t.storage->eta_charge * x[p.index.charge[k][q]] -
             h / t.storage->eta_discharge * x[p.index.use[k][q]];
      CHECK(soc == doctest::Approx(x[p.index.state[k][q]]).epsilon(1e-9).scale(1.0));
    }
    CHECK(std::abs(soc - start) <= 1e-6 * std::max(1.0, start));
  }
}

TEST_CASE("doubling demand doubles optimal resource use without binding potentials") {
  auto base = fixtures::small_system();
  for (auto& t : base.technologies) {
    t.f_ext = 0.0;
    t.f_max = 1e4;
  }
  base.resources[0].availability = lp::kInf;
  auto twice = base;
  twice.demands[0].annual *= 2.0;

  auto use = [](const Scenario& s) {
    auto p = build_problem(s);
    const auto sol = solve_cost(s, p);
    REQUIRE(sol.status == lp::Status::kOptimal);
    double total = 0;
    for (int t = 0; t < kPeriods; ++t) total += sol.values[p.index.resource[0][t]] * s.periods[t].hours;
    return std::pair{total, sol.objective};
  };
  const auto [u1, c1] = use(base);
  const auto [u2, c2] = use(twice);
  CHECK(u2 == doctest::Approx(2.0 * u1).epsilon(1e-6));
  CHECK(c2 == doctest::Approx(2.0 * c1).epsilon(1e-9));
}

TEST_CASE("scenario loader reads the documented CSV layout") {
  const auto dir = fs::temp_directory_path() / "lcaes_scenario_io";
  fs::remove_all(dir);
  fs::create_directories(dir);
  io::write_text((dir / "layers.csv").string(), "id,unit,cpc\nELEC,GWh,171\nGAS,GWh,120\n");
  io::write_text((dir / "demands.csv").string(), "layer,sector,annual\nELEC,households,120\n");
  io::write_text((dir / "resources.csv").string(), "id,layer,availability,c_op\nNG,GAS,inf,0.03\n");
  io::write_text((dir / "technologies.csv").string(),
                 "id,category,conversion,c_inv,c_maint,lifetime,f_ext,f_min,f_max,capacity_factor,integer\n"
                 "CCGT,electricity,ELEC:1;GAS:-2,900,20,25,0,0,5,1,0\n"
                 "PV,electricity,ELEC:1,1200,15,25,0,0,5,0.1;0.1;0.1;0.1;0.1;0.1;0.1;0.1;0.1;0.1;0.1;0.2,1\n");
  io::write_text((dir / "storage.csv").string(), "tech,eta_charge,eta_discharge,hours\n");
  io::write_text((dir / "scenario.json").string(), R"({"discount_rate": 0.05})");

  const auto s = load_scenario(dir.string());
  CHECK(validate_scenario(s).empty());
  CHECK(s.discount_rate == 0.05);
  REQUIRE(s.technologies.size() == 2);
  CHECK(s.technologies[0].conversion.at("GAS") == -2.0);
  CHECK(s.technologies[1].capacity_factor[11] == 0.2);
  CHECK(s.technologies[1].integer);
  CHECK(std::isinf(s.resources[0].availability));
  CHECK(s.demands[0].monthly_shares[4] == doctest::Approx(1.0 / 12));

  fs::remove(dir / "demands.csv");
  CHECK_THROWS_AS(load_scenario(dir.string()), IoError);
  fs::remove_all(dir);
}

TEST_CASE("conversion and monthly parsers reject malformed text") {
  CHECK(parse_conversion("A:1;B:-0.5").size() == 2);
  CHECK_THROWS_AS(parse_conversion("A1"), IoError);
  CHECK_THROWS_AS(parse_conversion("A:1;A:2"), IoError);
  CHECK_THROWS_AS(parse_monthly("1;2"), IoError);
}
