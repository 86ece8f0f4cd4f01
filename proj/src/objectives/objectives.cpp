#include "lcaes/objectives/objectives.hpp"

#include <cmath>

namespace lcaes::objectives {

using core::Characterization;
using core::kPeriods;

double annualization_factor(double rate, double years) {
  if (!(years >= 1.0)) throw DomainError("annualization needs a lifetime of at least one year");
  if (!(rate >= 0.0)) throw DomainError("annualization needs a non-negative discount rate");
  if (rate == 0.0) return 1.0 / years;
  const double growth = std::pow(1.0 + rate, years);
  return rate * growth / (growth - 1.0);
}

double LinearExpression::evaluate(const std::vector<double>& x) const {
  double v = constant;
  for (const auto& t : terms) v += t.value * x[t.col];
  return v;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

double annual_use(const core::Scenario& s, const core::PeriodColumns& cols,
                  const std::vector<double>& x) {
  double e = 0.0;
  for (int t = 0; t < kPeriods; ++t) e += x[cols[t]] * s.periods[t].hours;
  return e;
}

}  // namespace

MissingCoefficientError::MissingCoefficientError(const std::string& indicator,
                                                 std::vector<std::string> entities)
    : DomainError("no " + indicator + " coefficients for uncharacterized entities: " + join(entities)),
      entities_(std::move(entities)) {}

LinearExpression cost_objective(const core::Scenario& s, const core::ModelIndex& ix) {
  LinearExpression e;
  for (std::size_t k = 0; k < s.technologies.size(); ++k) {
    const auto& t = s.technologies[k];
    const double tau = annualization_factor(s.discount_rate, t.lifetime);
    e.terms.push_back({ix.size[k], t.c_inv * tau + t.c_maint});
    e.constant -= t.c_inv * tau * t.f_ext;
  }
  for (std::size_t r = 0; r < s.resources.size(); ++r) {
    const auto& res = s.resources[r];
    if (res.c_op == 0.0) continue;
    for (int p = 0; p < kPeriods; ++p) e.terms.push_back({ix.resource[r][p], res.c_op * s.periods[p].hours});
  }
  return e;
}

LinearExpression lcia_objective(const core::Scenario& s, const core::ModelIndex& ix,
                                const std::string& indicator) {
  std::vector<std::string> missing;
  for (const auto& t : s.technologies) {
    if (t.lcia_stat.status == Characterization::kUncharacterized) missing.push_back(t.id + " (construction)");
    if (t.lcia_var.status == Characterization::kUncharacterized) missing.push_back(t.id + " (operation)");
  }
  for (const auto& r : s.resources) {
    if (r.lcia_var.status == Characterization::kUncharacterized) missing.push_back(r.id);
  }
  if (!missing.empty()) throw MissingCoefficientError(indicator, std::move(missing));

  LinearExpression e;
  for (std::size_t k = 0; k < s.technologies.size(); ++k) {
    const auto& t = s.technologies[k];
    const double stat = t.lcia_stat.get(indicator);
    if (stat != 0.0) e.terms.push_back({ix.size[k], stat / t.lifetime});
    const double var = t.lcia_var.get(indicator);
    if (var != 0.0) {
      for (int p = 0; p < kPeriods; ++p) e.terms.push_back({ix.use[k][p], var * s.periods[p].hours});
    }
  }
  for (std::size_t r = 0; r < s.resources.size(); ++r) {
    const double var = s.resources[r].lcia_var.get(indicator);
    if (var == 0.0) continue;
    for (int p = 0; p < kPeriods; ++p) e.terms.push_back({ix.resource[r][p], var * s.periods[p].hours});
  }
  return e;
}

LinearExpression objective_expression(const core::Scenario& s, const core::ModelIndex& ix,
                                      Objective o) {
  if (o == Objective::kCost) return cost_objective(s, ix);
  return lcia_objective(s, ix, to_string(o));
}

void set_objective(lp::Problem& p, const LinearExpression& e) {
  p.clear_objective();
  std::vector<double> cost(p.num_variables(), 0.0);
  for (const auto& t : e.terms) cost[t.col] += t.value;
  for (int j = 0; j < p.num_variables(); ++j) p.set_cost(j, cost[j]);
  p.set_objective_offset(e.constant);
}

ObjectiveBreakdown breakdown(const core::Scenario& s, const core::ModelIndex& ix,
                             const std::vector<double>& x, const std::string& name) {
  ObjectiveBreakdown b;
  b.objective = name;
  const bool cost = name == "COST";
  for (std::size_t k = 0; k < s.technologies.size(); ++k) {
    const auto& t = s.technologies[k];
    BreakdownRow row{t.id, "technology", core::to_string(t.category), 0.0, 0.0};
    const double size = x[ix.size[k]];
    if (cost) {
      const double tau = annualization_factor(s.discount_rate, t.lifetime);
      row.constant = t.c_inv * (size - t.f_ext) * tau + t.c_maint * size;
    } else {
      row.constant = t.lcia_stat.get(name) * size / t.lifetime;
      row.variable = t.lcia_var.get(name) * annual_use(s, ix.use[k], x);
    }
    b.rows.push_back(row);
  }
  for (std::size_t r = 0; r < s.resources.size(); ++r) {
    const auto& res = s.resources[r];
    const double coef = cost ? res.c_op : res.lcia_var.get(name);
    b.rows.push_back({res.id, "resource", "resource", 0.0, coef * annual_use(s, ix.resource[r], x)});
  }
  for (const auto& row : b.rows) b.total += row.constant + row.variable;
  return b;
}

std::map<std::string, double> evaluate_all(const core::Scenario& s, const core::ModelIndex& ix,
                                           const std::vector<double>& x) {
  std::map<std::string, double> out;
  out["COST"] = breakdown(s, ix, x, "COST").total;
  for (const auto& ind : indicator_catalog()) out[ind.acronym] = breakdown(s, ix, x, ind.acronym).total;
  return out;
}

}  // namespace lcaes::objectives
