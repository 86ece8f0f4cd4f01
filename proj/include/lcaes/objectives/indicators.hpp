#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcaes::objectives {

enum class IndicatorGroup { kImpactProfile, kHumanHealth, kEcosystemQuality };

struct Indicator {
  std::string acronym;
  std::string name;
  std::string unit;
  IndicatorGroup group;
};

/// Impact indicator catalog: five optimizable impact-profile indicators
/// followed by the reporting-only damage categories.
const std::vector<Indicator>& indicator_catalog();
const Indicator* find_indicator(std::string_view acronym);
/// Acronyms of the reporting-only categories, catalog order.
std::vector<std::string> reporting_categories();

/// The six objectives that can be optimized.
enum class Objective { kCost, kCF, kFNEU, kREQD, kRHHD, kWSF };

inline constexpr std::array<Objective, 6> kAllObjectives = {
    Objective::kCost, Objective::kCF, Objective::kFNEU,
    Objective::kREQD, Objective::kRHHD, Objective::kWSF};
inline constexpr std::array<Objective, 5> kImpactObjectives = {
    Objective::kCF, Objective::kFNEU, Objective::kREQD, Objective::kRHHD, Objective::kWSF};

std::string to_string(Objective o);
std::optional<Objective> parse_objective(std::string_view s);
std::string unit_of(Objective o);

}  // namespace lcaes::objectives
