#pragma once

#include <string>
#include <vector>

#include "lcaes/core/model.hpp"

namespace lcaes::core {

/// Files that make up a scenario directory, in hashing order.
const std::vector<std::string>& scenario_files();

/// Reads layers.csv, demands.csv, resources.csv, technologies.csv,
/// storage.csv and scenario.json from `dir`. Throws IoError for missing or
/// malformed files; semantic problems are left to validate_scenario.
Scenario load_scenario(const std::string& dir);

/// Attaches impact coefficients from an lcia_coefficients.csv file
/// (entity,kind,phase,indicator,value,status).
void load_coefficients(Scenario& s, const std::string& path);

/// Parses "LAYER:coef;LAYER:coef".
std::map<std::string, double> parse_conversion(const std::string& text);
/// Parses one value (broadcast to all periods) or twelve ';'-separated values.
MonthlyValues parse_monthly(const std::string& text);

}  // namespace lcaes::core
