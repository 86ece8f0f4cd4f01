#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcaes/core/problem_builder.hpp"
#include "lcaes/error.hpp"
#include "lcaes/lp/problem.hpp"
#include "lcaes/objectives/indicators.hpp"

namespace lcaes::objectives {

/// Capital recovery factor rate(1+rate)^n / ((1+rate)^n - 1); 1/n at rate 0.
/// Throws DomainError for n < 1 or rate < 0.
double annualization_factor(double rate, double years);

/// Affine expression over problem columns.
struct LinearExpression {
  std::vector<lp::Entry> terms;
  double constant = 0.0;

  double evaluate(const std::vector<double>& x) const;
};

/// Raised when an impact objective would silently treat technologies or
/// resources without inventories as impact-free.
class MissingCoefficientError : public DomainError {
 public:
  MissingCoefficientError(const std::string& indicator, std::vector<std::string> entities);
  const std::vector<std::string>& entities() const { return entities_; }

 private:
  std::vector<std::string> entities_;
};

/// Annual total cost: annualized investment in new capacity, maintenance of
/// all capacity, and resource purchases.
LinearExpression cost_objective(const core::Scenario& s, const core::ModelIndex& ix);

/// Annual impact for one indicator: construction impact spread over the
/// lifetime plus operation impact of technologies and resources.
LinearExpression lcia_objective(const core::Scenario& s, const core::ModelIndex& ix,
                                const std::string& indicator);

LinearExpression objective_expression(const core::Scenario& s, const core::ModelIndex& ix,
                                      Objective o);

/// Replaces the LP objective with `e`.
void set_objective(lp::Problem& p, const LinearExpression& e);

struct BreakdownRow {
  std::string entity;
  std::string kind;      // technology | resource
  std::string category;  // end-use category, or "resource"
  double constant = 0.0;
  double variable = 0.0;
};

struct ObjectiveBreakdown {
  std::string objective;
  std::vector<BreakdownRow> rows;
  double total = 0.0;
};

/// Per-entity constant/variable split recomputed from solution values.
/// `name` is "COST" or any catalog indicator. Entities without coefficients
/// contribute zero here; the strict check lives in lcia_objective.
ObjectiveBreakdown breakdown(const core::Scenario& s, const core::ModelIndex& ix,
                             const std::vector<double>& x, const std::string& name);

/// Values of the six objectives plus every reporting category.
std::map<std::string, double> evaluate_all(const core::Scenario& s, const core::ModelIndex& ix,
                                           const std::vector<double>& x);

}  // namespace lcaes::objectives
