#pragma once

#include <array>
#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/lp/problem.hpp"

namespace lcaes::core {

using PeriodColumns = std::array<int, kPeriods>;

/// Maps problem columns/rows back to model semantics. Column arrays for
/// non-storage technologies hold -1 in the storage-only slots.
struct ModelIndex {
  std::vector<int> size;                   // F(tec)
  std::vector<PeriodColumns> use;          // F_t(tec, t); discharge for storage
  std::vector<PeriodColumns> charge;       // storage charging rate
  std::vector<PeriodColumns> state;        // storage state of charge (GWh)
  std::vector<PeriodColumns> resource;     // R(res, t)
  std::vector<PeriodColumns> balance_row;  // per layer
  std::vector<PeriodColumns> capacity_row; // per technology
  std::vector<int> availability_row;       // per resource, -1 when unbounded
};

/// The assembled model: constraints only; objectives are attached by the
/// objectives module on a copy.
struct OptimizationProblem {
  lp::Problem lp;
  ModelIndex index;
};

/// Builds variables and constraints (layer balances, capacity limits,
/// resource availability, cyclic storage balance). The scenario must
/// validate cleanly. Throws lp::StructuralError when a layer appears in no
/// constraint.
OptimizationProblem build_problem(const Scenario& s);

/// Layer balance residuals (supply - demand) per layer and period.
std::vector<std::array<double, kPeriods>> balance_residuals(const Scenario& s,
                                                            const OptimizationProblem& p,
                                                            const std::vector<double>& x);

}  // namespace lcaes::core
