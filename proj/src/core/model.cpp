#include "lcaes/core/model.hpp"

namespace lcaes::core {

MonthlyValues calendar_month_hours() {
  return {744, 672, 744, 720, 744, 720, 744, 744, 720, 744, 720, 744};
}

std::string to_string(Unit u) {
  switch (u) {
    case Unit::kGWh:
      return "GWh";
    case Unit::kMtkm:
      return "Mtkm";
    case Unit::kMpkm:
      return "Mpkm";
  }
  return "?";
}

std::string to_string(EndUseCategory c) {
  switch (c) {
    case EndUseCategory::kElectricity:
      return "electricity";
    case EndUseCategory::kHeat:
      return "heat";
    case EndUseCategory::kMobilityFreight:
      return "mobility_freight";
    case EndUseCategory::kMobilityPassenger:
      return "mobility_passenger";
    case EndUseCategory::kFuel:
      return "fuel";
  }
  return "?";
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::kHouseholds:
      return "households";
    case Sector::kServices:
      return "services";
    case Sector::kIndustry:
      return "industry";
    case Sector::kMobility:
      return "mobility";
  }
  return "?";
}

std::string to_string(Characterization c) {
  switch (c) {
    case Characterization::kUncharacterized:
      return "uncharacterized";
    case Characterization::kCharacterized:
      return "characterized";
    case Characterization::kNoInventory:
      return "no_inventory";
  }
  return "?";
}

std::optional<Unit> parse_unit(std::string_view s) {
  if (s == "GWh") return Unit::kGWh;
  if (s == "Mtkm") return Unit::kMtkm;
  if (s == "Mpkm") return Unit::kMpkm;
  return std::nullopt;
}

std::optional<EndUseCategory> parse_category(std::string_view s) {
  for (auto c : {EndUseCategory::kElectricity, EndUseCategory::kHeat,
                 EndUseCategory::kMobilityFreight, EndUseCategory::kMobilityPassenger,
                 EndUseCategory::kFuel}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<Sector> parse_sector(std::string_view s) {
  for (auto x : {Sector::kHouseholds, Sector::kServices, Sector::kIndustry, Sector::kMobility}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

Unit operation_unit(EndUseCategory c) {
  switch (c) {
    case EndUseCategory::kMobilityFreight:
      return Unit::kMtkm;
    case EndUseCategory::kMobilityPassenger:
      return Unit::kMpkm;
    default:
      return Unit::kGWh;
  }
}

std::string Technology::primary_output() const {
  std::string out;
  for (const auto& [layer, coef] : conversion) {
    if (coef > 0.0) {
      if (!out.empty()) return {};
      out = layer;
    }
  }
  return out;
}

int Scenario::layer_index(std::string_view id) const {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].id == id) return static_cast<int>(i);
  return -1;
}

int Scenario::technology_index(std::string_view id) const {
  for (std::size_t i = 0; i < technologies.size(); ++i)
    if (technologies[i].id == id) return static_cast<int>(i);
  return -1;
}

int Scenario::resource_index(std::string_view id) const {
  for (std::size_t i = 0; i < resources.size(); ++i)
    if (resources[i].id == id) return static_cast<int>(i);
  return -1;
}

double Scenario::annual_demand(std::string_view layer) const {
  double total = 0.0;
  for (const auto& d : demands)
    if (d.layer == layer) total += d.annual;
  return total;
}

double Scenario::demand_rate(std::string_view layer, int period) const {
  double energy = 0.0;
  for (const auto& d : demands)
    if (d.layer == layer) energy += d.annual * d.monthly_shares[period];
  return energy / periods.at(period).hours;
}

}  // namespace lcaes::core
