#include "lcaes/objectives/indicators.hpp"

namespace lcaes::objectives {

const std::vector<Indicator>& indicator_catalog() {
  using G = IndicatorGroup;
  static const std::vector<Indicator> catalog = {
      {"CF", "Carbon footprint", "kg CO2-eq (short)", G::kImpactProfile},
      {"FNEU", "Fossil and nuclear energy use", "MJ deprived", G::kImpactProfile},
      {"REQD", "Remaining Ecosystem quality damage", "DALY", G::kImpactProfile},
      {"RHHD", "Remaining Human health damage", "PDF.m2.yr", G::kImpactProfile},
      {"WSF", "Water scarcity footprint", "m3 world-eq", G::kImpactProfile},
      {"CCHHL", "Climate change, human health, long term", "DALY", G::kHumanHealth},
      {"CCHHS", "Climate change, human health, short term", "DALY", G::kHumanHealth},
      {"HTXCL", "Human toxicity cancer, long term", "DALY", G::kHumanHealth},
      {"HTXCS", "Human toxicity cancer, short term", "DALY", G::kHumanHealth},
      {"HTXNCL", "Human toxicity non-cancer, long term", "DALY", G::kHumanHealth},
      {"HTXNCS", "Human toxicity non-cancer, short term", "DALY", G::kHumanHealth},
      {"IRHH", "Ionizing radiation, human health", "DALY", G::kHumanHealth},
      {"OLD", "Ozone layer depletion", "DALY", G::kHumanHealth},
      {"PMF", "Particulate matter formation", "DALY", G::kHumanHealth},
      {"PCOX", "Photochemical oxidant formation", "DALY", G::kHumanHealth},
      {"TTHH", "Total human health", "DALY", G::kHumanHealth},
      {"WAVHH", "Water availability, human health", "DALY", G::kHumanHealth},
      {"CCEQL", "Climate change, ecosystem quality, long term", "PDF.m2.yr", G::kEcosystemQuality},
      {"CCEQS", "Climate change, ecosystem quality, short term", "PDF.m2.yr", G::kEcosystemQuality},
      {"FWA", "Freshwater acidification", "PDF.m2.yr", G::kEcosystemQuality},
      {"FWEXL", "Freshwater ecotoxicity, long term", "PDF.m2.yr", G::kEcosystemQuality},
      {"FWEXS", "Freshwater ecotoxicity, short term", "PDF.m2.yr", G::kEcosystemQuality},
      {"FWEU", "Freshwater eutrophication", "PDF.m2.yr", G::kEcosystemQuality},
      {"IREQ", "Ionizing radiation, ecosystem quality", "PDF.m2.yr", G::kEcosystemQuality},
      {"LOBDV", "Land occupation, biodiversity", "PDF.m2.yr", G::kEcosystemQuality},
      {"LTBDV", "Land transformation, biodiversity", "PDF.m2.yr", G::kEcosystemQuality},
      {"MAL", "Marine acidification, long term", "PDF.m2.yr", G::kEcosystemQuality},
      {"MAS", "Marine acidification, short term", "PDF.m2.yr", G::kEcosystemQuality},
      {"MEU", "Marine eutrophication", "PDF.m2.yr", G::kEcosystemQuality},
      {"TRA", "Terrestrial acidification", "PDF.m2.yr", G::kEcosystemQuality},
      {"TPW", "Thermally polluted water", "PDF.m2.yr", G::kEcosystemQuality},
      {"TTEQ", "Total ecosystem quality", "PDF.m2.yr", G::kEcosystemQuality},
      {"WAVFWES", "Water availability, freshwater ecosystem", "PDF.m2.yr", G::kEcosystemQuality},
      {"WAVTES", "Water availability, terrestrial ecosystem", "PDF.m2.yr", G::kEcosystemQuality},
  };
  return catalog;
}

const Indicator* find_indicator(std::string_view acronym) {
  for (const auto& i : indicator_catalog())
    if (i.acronym == acronym) return &i;
  return nullptr;
}

std::vector<std::string> reporting_categories() {
  std::vector<std::string> out;
  for (const auto& i : indicator_catalog())
    if (i.group != IndicatorGroup::kImpactProfile) out.push_back(i.acronym);
  return out;
}

std::string to_string(Objective o) {
  switch (o) {
    case Objective::kCost:
      return "COST";
    case Objective::kCF:
      return "CF";
    case Objective::kFNEU:
      return "FNEU";
    case Objective::kREQD:
      return "REQD";
    case Objective::kRHHD:
      return "RHHD";
    case Objective::kWSF:
      return "WSF";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view s) {
  for (auto o : kAllObjectives)
    if (to_string(o) == s) return o;
  return std::nullopt;
}

std::string unit_of(Objective o) {
  if (o == Objective::kCost) return "MCHF/yr";
  return find_indicator(to_string(o))->unit + "/yr";
}

}  // namespace lcaes::objectives
