#include "lcaes/core/problem_builder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lcaes::core {

namespace {

std::string col_name(const std::string& kind, const std::string& id, int t = -1) {
  return t < 0 ? kind + "[" + id + "]" : kind + "[" + id + "," + std::to_string(t + 1) + "]";
}

}  // namespace

OptimizationProblem build_problem(const Scenario& s) {
  OptimizationProblem out;
  auto& lp = out.lp;
  auto& ix = out.index;
  const int ntec = static_cast<int>(s.technologies.size());
  const int nres = static_cast<int>(s.resources.size());
  const int nlay = static_cast<int>(s.layers.size());
  PeriodColumns none;
  none.fill(-1);

  ix.size.resize(ntec);
  ix.use.assign(ntec, none);
  ix.charge.assign(ntec, none);
  ix.state.assign(ntec, none);
  ix.capacity_row.assign(ntec, none);
  for (int k = 0; k < ntec; ++k) {
    const auto& t = s.technologies[k];
    const double lower = std::max(t.f_min, t.f_ext);
    ix.size[k] = lp.add_variable(col_name("F", t.id), lower, t.f_max, 0.0, t.integer);
    for (int p = 0; p < kPeriods; ++p) ix.use[k][p] = lp.add_variable(col_name("F_t", t.id, p), 0.0, lp::kInf);
    if (t.is_storage()) {
      for (int p = 0; p < kPeriods; ++p) {
        ix.charge[k][p] = lp.add_variable(col_name("Sto_in", t.id, p), 0.0, lp::kInf);
        ix.state[k][p] = lp.add_variable(col_name("SoC", t.id, p), 0.0, lp::kInf);
      }
    }
  }
  ix.resource.assign(nres, none);
  for (int r = 0; r < nres; ++r) {
    for (int p = 0; p < kPeriods; ++p)
      ix.resource[r][p] = lp.add_variable(col_name("R", s.resources[r].id, p), 0.0, lp::kInf);
  }

  // Layer balance, demand on the right-hand side.
  ix.balance_row.assign(nlay, none);
  for (int l = 0; l < nlay; ++l) {
    const auto& layer = s.layers[l];
    bool touched = false;
    for (int p = 0; p < kPeriods; ++p) {
      std::vector<lp::Entry> e;
      for (int k = 0; k < ntec; ++k) {
        const auto& t = s.technologies[k];
        auto it = t.conversion.find(layer.id);
        if (it == t.conversion.end() || it->second == 0.0) continue;
        e.push_back({ix.use[k][p], it->second});
        if (t.is_storage()) e.push_back({ix.charge[k][p], -1.0});
      }
      for (int r = 0; r < nres; ++r) {
        if (s.resources[r].layer == layer.id) e.push_back({ix.resource[r][p], 1.0});
      }
      const double demand = s.demand_rate(layer.id, p);
      touched = touched || !e.empty() || demand != 0.0;
      ix.balance_row[l][p] =
          lp.add_row(col_name("balance", layer.id, p), std::move(e), lp::RowSense::kEqual, demand);
    }
    if (!touched) throw lp::StructuralError("layer '" + layer.id + "' appears in no constraint");
  }

  // Capacity limits.
  for (int k = 0; k < ntec; ++k) {
    const auto& t = s.technologies[k];
    const double rate = t.is_storage() ? 1.0 / t.storage->hours : 1.0;
    for (int p = 0; p < kPeriods; ++p) {
      ix.capacity_row[k][p] =
          lp.add_row(col_name("capacity", t.id, p),
                     {{ix.use[k][p], 1.0}, {ix.size[k], -t.capacity_factor[p] * rate}},
                     lp::RowSense::kLessEqual, 0.0);
    }
  }

  // Annual resource availability.
  ix.availability_row.assign(nres, -1);
  for (int r = 0; r < nres; ++r) {
    const auto& res = s.resources[r];
    if (!std::isfinite(res.availability)) continue;
    std::vector<lp::Entry> e;
    for (int p = 0; p < kPeriods; ++p) e.push_back({ix.resource[r][p], s.periods[p].hours});
    ix.availability_row[r] =
        lp.add_row(col_name("availability", res.id), std::move(e), lp::RowSense::kLessEqual, res.availability);
  }

  // Storage: cyclic state-of-charge balance and energy capacity.
  for (int k = 0; k < ntec; ++k) {
    const auto& t = s.technologies[k];
    if (!t.is_storage()) continue;
    const auto& sp = *t.storage;
    for (int p = 0; p < kPeriods; ++p) {
      const int prev = (p + kPeriods - 1) % kPeriods;
      const double h = s.periods[p].hours;
      lp.add_row(col_name("storage_level", t.id, p),
                 {{ix.state[k][p], 1.0},
                  {ix.state[k][prev], -1.0},
                  {ix.charge[k][p], -h * sp.eta_charge},
                  {ix.use[k][p], h / sp.eta_discharge}},
                 lp::RowSense::kEqual, 0.0);
      lp.add_row(col_name("storage_energy", t.id, p), {{ix.state[k][p], 1.0}, {ix.size[k], -1.0}},
                 lp::RowSense::kLessEqual, 0.0);
      lp.add_row(col_name("storage_charge", t.id, p),
                 {{ix.charge[k][p], 1.0}, {ix.size[k], -1.0 / sp.hours}}, lp::RowSense::kLessEqual, 0.0);
    }
  }
  return out;
}

std::vector<std::array<double, kPeriods>> balance_residuals(const Scenario& s,
                                                            const OptimizationProblem& p,
                                                            const std::vector<double>& x) {
  std::vector<std::array<double, kPeriods>> out(s.layers.size());
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    for (int t = 0; t < kPeriods; ++t) {
      const int row = p.index.balance_row[l][t];
      out[l][t] = p.lp.activity(row, x) - p.lp.row(row).rhs;
    }
  }
  return out;
}

}  // namespace lcaes::core
