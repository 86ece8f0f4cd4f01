#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcaes::core {

inline constexpr int kPeriods = 12;

using MonthlyValues = std::array<double, kPeriods>;

/// Calendar-month hours of a non-leap year.
MonthlyValues calendar_month_hours();

enum class Unit { kGWh, kMtkm, kMpkm };

/// End-use categories of the operation/construction unit table. kFuel covers
/// conversion technologies whose output is an energy carrier (GWh / GW).
enum class EndUseCategory { kElectricity, kHeat, kMobilityFreight, kMobilityPassenger, kFuel };

enum class Sector { kHouseholds, kServices, kIndustry, kMobility };

/// Whether an impact coefficient set comes from an inventory, is explicitly
/// empty, or was never characterized.
enum class Characterization { kUncharacterized, kCharacterized, kNoInventory };

std::string to_string(Unit u);
std::string to_string(EndUseCategory c);
std::string to_string(Sector s);
std::string to_string(Characterization c);
std::optional<Unit> parse_unit(std::string_view s);
std::optional<EndUseCategory> parse_category(std::string_view s);
std::optional<Sector> parse_sector(std::string_view s);

/// Operation unit of a category, e.g. GWh for electricity, Mpkm for passenger
/// mobility. Construction units are the same per hour (GW, Mpkm/h, ...).
Unit operation_unit(EndUseCategory c);

struct Period {
  int id = 0;
  double hours = 0.0;
};

struct Layer {
  std::string id;
  Unit unit = Unit::kGWh;
  /// Product classification code used to detect double counting.
  std::string cpc;
};

struct EndUseDemand {
  std::string layer;
  Sector sector = Sector::kHouseholds;
  double annual = 0.0;
  MonthlyValues monthly_shares{};
};

/// Per-indicator impact coefficients with their provenance.
struct ImpactCoefficients {
  Characterization status = Characterization::kUncharacterized;
  std::map<std::string, double> values;

  double get(const std::string& indicator) const {
    auto it = values.find(indicator);
    return it == values.end() ? 0.0 : it->second;
  }
};

struct Resource {
  std::string id;
  std::string layer;
  double availability = 0.0;  // GWh per year; may be +inf
  double c_op = 0.0;          // MCHF per GWh
  ImpactCoefficients lcia_var;
};

struct StorageParams {
  double eta_charge = 1.0;
  double eta_discharge = 1.0;
  /// Energy-to-power ratio in hours; charge and discharge rates are bounded
  /// by F / hours.
  double hours = 1.0;
};

struct Technology {
  std::string id;
  EndUseCategory category = EndUseCategory::kElectricity;
  /// Signed coefficients per layer per unit of use; outputs positive.
  std::map<std::string, double> conversion;
  double c_inv = 0.0;    // MCHF per capacity unit
  double c_maint = 0.0;  // MCHF per capacity unit and year
  double lifetime = 1.0;
  double f_ext = 0.0;
  double f_min = 0.0;
  double f_max = 0.0;
  MonthlyValues capacity_factor{};
  bool integer = false;
  /// Present for storage units; F is then the energy capacity in GWh.
  std::optional<StorageParams> storage;
  ImpactCoefficients lcia_stat;  // per capacity unit
  ImpactCoefficients lcia_var;   // per operation unit

  bool is_storage() const { return storage.has_value(); }
  /// The single layer with a positive coefficient, or empty when ambiguous.
  std::string primary_output() const;
};

/// Fixed capacity configuration the burden-shift report compares against.
struct ReferenceRun {
  std::string label = "reference";
  std::map<std::string, double> capacities;
};

struct Scenario {
  std::vector<Period> periods;
  std::vector<Layer> layers;
  std::vector<EndUseDemand> demands;
  std::vector<Resource> resources;
  std::vector<Technology> technologies;
  double discount_rate = 0.03;
  std::optional<ReferenceRun> reference;
  /// storage.csv rows naming no technology; reported by validation.
  std::vector<std::string> unresolved_storage;

  int layer_index(std::string_view id) const;
  int technology_index(std::string_view id) const;
  int resource_index(std::string_view id) const;

  /// Annual demand per layer summed over sectors.
  double annual_demand(std::string_view layer) const;
  /// Demand of one layer in one period as an average rate (unit per hour).
  double demand_rate(std::string_view layer, int period) const;
};

}  // namespace lcaes::core
