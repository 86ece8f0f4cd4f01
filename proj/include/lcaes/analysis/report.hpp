#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcaes/analysis/burden_shift.hpp"
#include "lcaes/analysis/correlation.hpp"
#include "lcaes/analysis/distributions.hpp"
#include "lcaes/core/problem_builder.hpp"

namespace lcaes::analysis {

/// Square matrix CSV: header "variable,<names>", one row per variable.
std::string matrix_csv(const std::vector<std::string>& names, const std::vector<std::vector<double>>& m);
/// Inverse of matrix_csv; returns names and fills `m`.
std::vector<std::string> parse_matrix_csv(const std::string& text, std::vector<std::vector<double>>& m);

std::string correlation_r_csv(const CorrelationMatrix& c);
std::string correlation_p_csv(const CorrelationMatrix& c);
CorrelationMatrix parse_correlation(const std::string& r_csv, const std::string& p_csv, int samples);

/// variable,bin,lower,upper,frequency
std::string distributions_csv(const std::vector<Distribution>& ds);
/// variable,location,frequency
std::string modes_csv(const std::vector<Distribution>& ds);

/// run,<objectives>; empty entries written as "undefined".
std::string burden_shift_csv(const BurdenShiftTable& t);
BurdenShiftTable parse_burden_shift(const std::string& text);

/// Annual cost split by end-use category (resources under "resource").
struct CostShare {
  std::string category;
  double investment = 0.0;
  double maintenance = 0.0;
  double operation = 0.0;
};

std::vector<CostShare> cost_composition(const core::Scenario& s, const core::ModelIndex& ix,
                                        const std::vector<double>& x);

/// Share of each category in one objective's total, by category.
std::map<std::string, double> category_shares(const core::Scenario& s, const core::ModelIndex& ix,
                                              const std::vector<double>& x, const std::string& objective);

/// Least-squares line with a 95 % band for the mean response
/// (yhat +- 1.96 SE).
struct TrendLine {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_se = 0.0;
  double x_mean = 0.0;
  double sxx = 0.0;
  int n = 0;

  double at(double x) const { return intercept + slope * x; }
  double half_width(double x) const;
};

TrendLine trend_line(const std::vector<double>& x, const std::vector<double>& y);

/// Scatter matrix: upper triangle r and p, diagonal histograms, lower
/// triangle scatter with trend line and band.
std::string scatter_matrix_svg(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                               const CorrelationMatrix& c, const std::vector<Distribution>& ds);

}  // namespace lcaes::analysis
