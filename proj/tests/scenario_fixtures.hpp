#pragma once

#include <string>

#include "lcaes/core/model.hpp"

namespace fixtures {

using namespace lcaes::core;

inline Scenario empty_year() {
  Scenario s;
  const auto h = calendar_month_hours();
  for (int t = 0; t < kPeriods; ++t) s.periods.push_back({t, h[t]});
  s.discount_rate = 0.0;
  return s;
}

inline Technology plant(const std::string& id, const std::string& layer, double c_inv, double f_max,
                        double lifetime = 25.0) {
  Technology t;
  t.id = id;
  t.category = EndUseCategory::kElectricity;
  t.conversion = {{layer, 1.0}};
  t.c_inv = c_inv;
  t.lifetime = lifetime;
  t.f_max = f_max;
  t.capacity_factor.fill(1.0);
  t.lcia_stat.status = Characterization::kCharacterized;
  t.lcia_var.status = Characterization::kCharacterized;
  return t;
}

inline EndUseDemand flat_demand(const std::string& layer, double annual) {
  EndUseDemand d;
  d.layer = layer;
  d.annual = annual;
  d.monthly_shares.fill(1.0 / kPeriods);
  return d;
}

/// One electricity layer served by a single plant.
inline Scenario single_plant(double annual = 12.0) {
  Scenario s = empty_year();
  s.layers.push_back({"ELEC", Unit::kGWh, "171"});
  s.demands.push_back(flat_demand("ELEC", annual));
  s.technologies.push_back(plant("PLANT", "ELEC", 1.0, 100.0));
  return s;
}

/// Two plants (cheap dirty, expensive clean), a gas-fired unit fed by an
/// imported resource and a seasonal store.
inline Scenario small_system() {
  Scenario s = empty_year();
  s.discount_rate = 0.03;
  s.layers.push_back({"ELEC", Unit::kGWh, "171"});
  s.layers.push_back({"GAS", Unit::kGWh, "120"});
  auto d = flat_demand("ELEC", 1000.0);
  for (int t = 0; t < kPeriods; ++t) d.monthly_shares[t] = (t < 3 || t > 8) ? 0.1 : 0.4 / 6.0;
  s.demands.push_back(d);

  Resource gas;
  gas.id = "GAS_IMPORT";
  gas.layer = "GAS";
  gas.availability = 5000.0;
  gas.c_op = 0.05;
  gas.lcia_var.status = Characterization::kCharacterized;
  gas.lcia_var.values = {{"CF", 200.0}, {"FNEU", 3.6}};
  s.resources.push_back(gas);

  auto pv = plant("PV", "ELEC", 1500.0, 0.5);
  for (int t = 0; t < kPeriods; ++t) pv.capacity_factor[t] = (t < 3 || t > 8) ? 0.05 : 0.2;
  pv.lcia_stat.values = {{"CF", 1e6}};
  auto ccgt = plant("CCGT", "ELEC", 900.0, 1.0);
  ccgt.conversion = {{"ELEC", 1.0}, {"GAS", -1.0 / 0.55}};
  ccgt.c_maint = 20.0;
  ccgt.f_ext = 0.05;
  ccgt.lcia_stat.values = {{"CF", 2e5}};
  ccgt.lcia_var.values = {{"CF", 5.0}};
  auto sto = plant("STO", "ELEC", 50.0, 500.0, 50.0);
  sto.storage = StorageParams{0.9, 0.9, 2000.0};
  s.technologies = {pv, ccgt, sto};
  return s;
}

/// small_system plus wind, with every profile indicator set so that each
/// technology is best on a different one.
inline Scenario five_profile_system() {
  Scenario s = small_system();
  auto& gas = s.resources[0];
  gas.lcia_var.values = {{"CF", 200.0}, {"FNEU", 3.6}, {"REQD", 0.2}, {"RHHD", 1e-4}, {"WSF", 2.0}};
  auto& pv = s.technologies[0];
  pv.lcia_stat.values = {{"CF", 1e6}, {"FNEU", 1e4}, {"REQD", 4e3}, {"RHHD", 0.2}, {"WSF", 5e4}};
  pv.lcia_var.values = {{"WSF", 5.0}};
  auto& ccgt = s.technologies[1];
  ccgt.lcia_stat.values = {{"CF", 2e5}, {"FNEU", 2e3}, {"REQD", 1e3}, {"RHHD", 0.05}, {"WSF", 1e4}};
  ccgt.lcia_var.values = {{"CF", 5.0}, {"RHHD", 2e-4}, {"WSF", 1.0}};
  auto& sto = s.technologies[2];
  sto.lcia_stat.values = {{"CF", 20.0}, {"FNEU", 0.5}, {"REQD", 10.0}, {"RHHD", 1e-5}, {"WSF", 1.0}};

  auto wind = plant("WIND", "ELEC", 1200.0, 0.4, 20.0);
  for (int t = 0; t < kPeriods; ++t) wind.capacity_factor[t] = (t < 3 || t > 8) ? 0.35 : 0.15;
  wind.c_maint = 30.0;
  wind.lcia_stat.values = {{"CF", 4e5}, {"FNEU", 8e3}, {"REQD", 6e4}, {"RHHD", 0.1}, {"WSF", 2e3}};
  wind.lcia_var.values = {{"REQD", 3.0}};
  s.technologies.push_back(wind);
  return s;
}

}  // namespace fixtures
