#include "lcaes/core/validate.hpp"

#include <cmath>
#include <set>

namespace lcaes::core {

std::vector<Diagnostic> validate_scenario(const Scenario& s) {
  std::vector<Diagnostic> out;
  auto report = [&out](std::string entity, std::string rule, std::string detail = {}) {
    out.push_back({std::move(entity), std::move(rule), std::move(detail)});
  };

  if (s.periods.size() != static_cast<std::size_t>(kPeriods)) {
    report("periods", "expected 12 periods", std::to_string(s.periods.size()));
  } else {
    double total = 0.0;
    for (const auto& p : s.periods) {
      if (!(p.hours > 0.0)) report("period " + std::to_string(p.id), "non-positive duration");
      total += p.hours;
    }
    if (std::abs(total - 8760.0) > 24.0) {
      report("periods", "durations do not sum to a year", std::to_string(total) + " h");
    }
  }
  if (!(s.discount_rate >= 0.0)) report("scenario", "negative discount rate");

  std::set<std::string> ids;
  for (const auto& l : s.layers) {
    if (!ids.insert(l.id).second) report("layer " + l.id, "duplicate layer id");
  }

  std::set<std::string> producible;
  for (const auto& r : s.resources) producible.insert(r.layer);

  for (const auto& d : s.demands) {
    const std::string who = "demand " + d.layer + "/" + to_string(d.sector);
    if (s.layer_index(d.layer) < 0) report(who, "unknown layer", d.layer);
    if (!(d.annual >= 0.0)) report(who, "negative annual demand");
    double sum = 0.0;
    bool negative = false;
    for (double v : d.monthly_shares) {
      sum += v;
      negative = negative || v < 0.0;
    }
    if (negative) report(who, "negative monthly share");
    if (std::abs(sum - 1.0) > 1e-9) report(who, "monthly shares do not sum to 1", std::to_string(sum));
  }

  std::set<std::string> res_ids;
  for (const auto& r : s.resources) {
    const std::string who = "resource " + r.id;
    if (!res_ids.insert(r.id).second) report(who, "duplicate resource id");
    if (s.layer_index(r.layer) < 0) report(who, "unknown layer", r.layer);
    if (!(r.availability >= 0.0)) report(who, "negative availability");
    if (!(r.c_op >= 0.0)) report(who, "negative operating cost");
  }

  std::set<std::string> tech_ids;
  for (const auto& t : s.technologies) {
    const std::string who = "technology " + t.id;
    if (!tech_ids.insert(t.id).second) report(who, "duplicate technology id");
    if (!(t.lifetime >= 1.0)) report(who, "lifetime below one year");
    if (!(t.f_min >= 0.0)) report(who, "negative minimum capacity");
    if (!(t.f_min <= t.f_max)) report(who, "minimum exceeds potential");
    if (!(t.f_ext >= 0.0)) report(who, "negative existing capacity");
    if (t.f_ext > t.f_max) report(who, "existing exceeds potential");
    if (!(t.c_inv >= 0.0) || !(t.c_maint >= 0.0)) report(who, "negative cost coefficient");
    for (double cf : t.capacity_factor) {
      if (!(cf >= 0.0 && cf <= 1.0)) {
        report(who, "capacity factor outside [0,1]");
        break;
      }
    }
    for (const auto& [layer, coef] : t.conversion) {
      if (s.layer_index(layer) < 0) report(who, "unknown layer", layer);
      if (!std::isfinite(coef)) report(who, "non-finite conversion coefficient", layer);
    }
    const std::string out_layer = t.primary_output();
    if (out_layer.empty()) {
      report(who, "needs exactly one primary output layer");
    } else {
      producible.insert(out_layer);
      const int li = s.layer_index(out_layer);
      if (li >= 0 && t.category != EndUseCategory::kFuel &&
          s.layers[li].unit != operation_unit(t.category)) {
        report(who, "output layer unit does not match category", out_layer);
      }
    }
    if (t.storage) {
      const auto& sp = *t.storage;
      if (t.conversion.size() != 1 || out_layer.empty() || t.conversion.begin()->second != 1.0) {
        report(who, "storage must convert exactly one layer with coefficient 1");
      }
      if (!(sp.eta_charge > 0.0 && sp.eta_charge <= 1.0) ||
          !(sp.eta_discharge > 0.0 && sp.eta_discharge <= 1.0)) {
        report(who, "storage efficiency outside (0,1]");
      }
      if (!(sp.hours > 0.0)) report(who, "storage energy-to-power ratio must be positive");
    }
  }
  for (const auto& orphan : s.unresolved_storage) {
    report("storage " + orphan, "unknown technology", orphan);
  }

  std::set<std::string> demanded;
  for (const auto& d : s.demands) {
    if (d.annual > 0.0) demanded.insert(d.layer);
  }
  for (const auto& layer : demanded) {
    if (!producible.count(layer)) report("layer " + layer, "unproducible layer");
  }

  if (s.reference) {
    for (const auto& [tech, cap] : s.reference->capacities) {
      const int k = s.technology_index(tech);
      if (k < 0) {
        report("reference " + s.reference->label, "unknown technology", tech);
      } else if (!(cap >= 0.0) || cap > s.technologies[k].f_max) {
        report("reference " + s.reference->label, "capacity outside [0, potential]", tech);
      }
    }
  }
  return out;
}

}  // namespace lcaes::core
