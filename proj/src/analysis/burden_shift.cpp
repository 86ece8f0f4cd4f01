#include "lcaes/analysis/burden_shift.hpp"

#include <cmath>

#include "lcaes/error.hpp"

namespace lcaes::analysis {

std::optional<double> percent_change(double value, double reference) {
  if (reference == 0.0) return std::nullopt;
  return 100.0 * (value - reference) / std::abs(reference);
}

BurdenShiftTable burden_shift(const std::vector<RunValues>& runs, const RunValues& reference,
                              const std::vector<std::string>& objectives) {
  BurdenShiftTable t;
  t.objectives = objectives;
  for (const auto& o : objectives) {
    if (!reference.values.count(o)) throw DomainError("reference " + reference.label + " lacks objective " + o);
  }
  for (const auto& r : runs) {
    t.runs.push_back(r.label);
    auto& row = t.percent.emplace_back();
    for (const auto& o : objectives) {
      auto it = r.values.find(o);
      if (it == r.values.end()) throw DomainError("run " + r.label + " lacks objective " + o);
      row.push_back(percent_change(it->second, reference.values.at(o)));
    }
  }
  return t;
}

}  // namespace lcaes::analysis
