#include "lcaes/lp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lcaes::lp {

int Problem::add_variable(std::string name, double lower, double upper,
                          double cost, bool integer) {
  vars_.push_back({std::move(name), lower, upper, cost, integer});
  return num_variables() - 1;
}

int Problem::add_row(std::string name, std::vector<Entry> entries,
                     RowSense sense, double rhs) {
  std::map<int, double> merged;
  for (const auto& e : entries) merged[e.col] += e.value;
  std::vector<Entry> packed;
  packed.reserve(merged.size());
  for (const auto& [col, value] : merged) {
    if (value != 0.0) packed.push_back({col, value});
  }
  rows_.push_back({std::move(name), std::move(packed), sense, rhs});
  return num_rows() - 1;
}

void Problem::set_cost(int col, double cost) { vars_.at(col).cost = cost; }

void Problem::set_bounds(int col, double lower, double upper) {
  auto& v = vars_.at(col);
  v.lower = lower;
  v.upper = upper;
}

void Problem::set_rhs(int row, double rhs) { rows_.at(row).rhs = rhs; }

void Problem::clear_objective() {
  for (auto& v : vars_) v.cost = 0.0;
  offset_ = 0.0;
}

bool Problem::has_integers() const {
  return std::any_of(vars_.begin(), vars_.end(),
                     [](const Variable& v) { return v.integer; });
}

double Problem::evaluate(const std::vector<double>& x) const {
  double total = offset_;
  for (std::size_t j = 0; j < vars_.size(); ++j) total += vars_[j].cost * x[j];
  return total;
}

double Problem::activity(int r, const std::vector<double>& x) const {
  double a = 0.0;
  for (const auto& e : rows_.at(r).entries) a += e.value * x[e.col];
  return a;
}

void Problem::check() const {
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const auto& v = vars_[j];
    if (std::isnan(v.lower) || std::isnan(v.upper) || !std::isfinite(v.cost)) {
      throw StructuralError("variable '" + v.name + "' has NaN data");
    }
    if (v.lower > v.upper) {
      throw StructuralError("variable '" + v.name + "' has lower > upper");
    }
    if (v.lower == kInf || v.upper == -kInf) {
      throw StructuralError("variable '" + v.name + "' has an empty domain");
    }
  }
  for (const auto& r : rows_) {
    if (!std::isfinite(r.rhs)) {
      throw StructuralError("row '" + r.name + "' has non-finite rhs");
    }
    for (const auto& e : r.entries) {
      if (e.col < 0 || e.col >= num_variables()) {
        throw StructuralError("row '" + r.name + "' references column " +
                              std::to_string(e.col) + " out of range");
      }
      if (!std::isfinite(e.value)) {
        throw StructuralError("row '" + r.name + "' has non-finite entry");
      }
    }
  }
}

}  // namespace lcaes::lp
