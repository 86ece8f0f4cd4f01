#include "lcaes/core/scenario_io.hpp"

#include <filesystem>

#include "json.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"

namespace lcaes::core {

namespace fs = std::filesystem;
using io::parse_number;

const std::vector<std::string>& scenario_files() {
  static const std::vector<std::string> files = {"layers.csv",      "demands.csv",
                                                 "resources.csv",   "technologies.csv",
                                                 "storage.csv",     "scenario.json"};
  return files;
}

std::map<std::string, double> parse_conversion(const std::string& text) {
  std::map<std::string, double> out;
  if (io::trim(text).empty()) return out;
  for (const auto& item : io::split(text, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw IoError("malformed conversion term '" + item + "'");
    const std::string layer = io::trim(item.substr(0, colon));
    if (out.count(layer)) throw IoError("layer '" + layer + "' repeated in conversion");
    out[layer] = parse_number(item.substr(colon + 1));
  }
  return out;
}

MonthlyValues parse_monthly(const std::string& text) {
  const auto parts = io::split(text, ';');
  MonthlyValues v{};
  if (parts.size() == 1) {
    v.fill(parse_number(parts[0]));
  } else if (parts.size() == static_cast<std::size_t>(kPeriods)) {
    for (int t = 0; t < kPeriods; ++t) v[t] = parse_number(parts[t]);
  } else {
    throw IoError("expected 1 or 12 monthly values, got " + std::to_string(parts.size()));
  }
  return v;
}

namespace {

std::string need_file(const std::string& dir, const std::string& name) {
  const auto p = fs::path(dir) / name;
  if (!fs::exists(p)) throw IoError("missing scenario file " + p.string());
  return p.string();
}

bool parse_flag(const std::string& s) { return s == "1" || s == "true" || s == "yes"; }

}  // namespace

Scenario load_scenario(const std::string& dir) {
  Scenario s;

  {
    const auto path = need_file(dir, "scenario.json");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(io::read_text(path));
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path + ": " + e.what());
    }
    s.discount_rate = j.value("discount_rate", 0.03);
    MonthlyValues hours = calendar_month_hours();
    if (j.contains("period_hours")) {
      const auto& h = j.at("period_hours");
      if (!h.is_array() || h.size() != static_cast<std::size_t>(kPeriods)) {
        throw IoError(path + ": period_hours must list 12 values");
      }
      for (int t = 0; t < kPeriods; ++t) hours[t] = h[t].get<double>();
    }
    for (int t = 0; t < kPeriods; ++t) s.periods.push_back({t, hours[t]});
    if (j.contains("reference")) {
      ReferenceRun ref;
      const auto& r = j.at("reference");
      ref.label = r.value("label", "reference");
      for (const auto& [tech, cap] : r.at("capacities").items()) ref.capacities[tech] = cap.get<double>();
      s.reference = std::move(ref);
    }
  }

  {
    const auto path = need_file(dir, "layers.csv");
    const auto t = io::read_csv(path);
    const int id = t.require("id", path), unit = t.require("unit", path), cpc = t.column("cpc");
    for (const auto& r : t.rows) {
      auto u = parse_unit(r[unit]);
      if (!u) throw IoError(path + ": unknown unit '" + r[unit] + "' for layer " + r[id]);
      s.layers.push_back({r[id], *u, cpc >= 0 ? r[cpc] : std::string{}});
    }
  }

  {
    const auto path = need_file(dir, "demands.csv");
    const auto t = io::read_csv(path);
    const int layer = t.require("layer", path), sector = t.require("sector", path),
              annual = t.require("annual", path);
    std::array<int, kPeriods> months{};
    bool has_months = true;
    for (int m = 0; m < kPeriods; ++m) {
      char name[8];
      std::snprintf(name, sizeof name, "m%02d", m + 1);
      months[m] = t.column(name);
      has_months = has_months && months[m] >= 0;
    }
    for (const auto& r : t.rows) {
      EndUseDemand d;
      d.layer = r[layer];
      auto sec = parse_sector(r[sector]);
      if (!sec) throw IoError(path + ": unknown sector '" + r[sector] + "'");
      d.sector = *sec;
      d.annual = parse_number(r[annual]);
      if (has_months && !r[months[0]].empty()) {
        for (int m = 0; m < kPeriods; ++m) d.monthly_shares[m] = parse_number(r[months[m]]);
      } else {
        d.monthly_shares.fill(1.0 / kPeriods);
      }
      s.demands.push_back(d);
    }
  }

  {
    const auto path = need_file(dir, "resources.csv");
    const auto t = io::read_csv(path);
    const int id = t.require("id", path), layer = t.require("layer", path),
              avail = t.require("availability", path), cop = t.require("c_op", path);
    for (const auto& r : t.rows) {
      Resource res;
      res.id = r[id];
      res.layer = r[layer];
      res.availability = parse_number(r[avail]);
      res.c_op = parse_number(r[cop]);
      s.resources.push_back(std::move(res));
    }
  }

  {
    const auto path = need_file(dir, "technologies.csv");
    const auto t = io::read_csv(path);
    const int id = t.require("id", path), cat = t.require("category", path),
              conv = t.require("conversion", path), cinv = t.require("c_inv", path),
              cmaint = t.require("c_maint", path), life = t.require("lifetime", path),
              fext = t.require("f_ext", path), fmin = t.require("f_min", path),
              fmax = t.require("f_max", path), cf = t.require("capacity_factor", path),
              integer = t.column("integer");
    for (const auto& r : t.rows) {
      Technology tech;
      tech.id = r[id];
      auto c = parse_category(r[cat]);
      if (!c) throw IoError(path + ": unknown category '" + r[cat] + "' for " + r[id]);
      tech.category = *c;
      try {
        tech.conversion = parse_conversion(r[conv]);
        tech.capacity_factor = parse_monthly(r[cf]);
      } catch (const IoError& e) {
        throw IoError(path + ": technology " + r[id] + ": " + e.what());
      }
      tech.c_inv = parse_number(r[cinv]);
      tech.c_maint = parse_number(r[cmaint]);
      tech.lifetime = parse_number(r[life]);
      tech.f_ext = parse_number(r[fext]);
      tech.f_min = parse_number(r[fmin]);
      tech.f_max = parse_number(r[fmax]);
      tech.integer = integer >= 0 && parse_flag(r[integer]);
      s.technologies.push_back(std::move(tech));
    }
  }

  {
    const auto path = need_file(dir, "storage.csv");
    const auto t = io::read_csv(path);
    const int tech = t.require("tech", path), ec = t.require("eta_charge", path),
              ed = t.require("eta_discharge", path), hours = t.require("hours", path);
    for (const auto& r : t.rows) {
      const int k = s.technology_index(r[tech]);
      if (k < 0) {
        s.unresolved_storage.push_back(r[tech]);
        continue;
      }
      s.technologies[k].storage =
          StorageParams{parse_number(r[ec]), parse_number(r[ed]), parse_number(r[hours])};
    }
  }

  const auto coeff = fs::path(dir) / "lcia_coefficients.csv";
  if (fs::exists(coeff)) load_coefficients(s, coeff.string());
  return s;
}

void load_coefficients(Scenario& s, const std::string& path) {
  const auto t = io::read_csv(path);
  const int entity = t.require("entity", path), kind = t.require("kind", path),
            phase = t.require("phase", path), indicator = t.require("indicator", path),
            value = t.require("value", path), status = t.require("status", path);
  auto parse_status = [&](const std::string& x) {
    for (auto c : {Characterization::kUncharacterized, Characterization::kCharacterized,
                   Characterization::kNoInventory}) {
      if (to_string(c) == x) return c;
    }
    throw IoError(path + ": unknown status '" + x + "'");
  };
  for (const auto& r : t.rows) {
    ImpactCoefficients* target = nullptr;
    if (r[kind] == "technology") {
      const int k = s.technology_index(r[entity]);
      if (k < 0) throw IoError(path + ": unknown technology '" + r[entity] + "'");
      if (r[phase] == "construction") target = &s.technologies[k].lcia_stat;
      if (r[phase] == "operation") target = &s.technologies[k].lcia_var;
    } else if (r[kind] == "resource") {
      const int k = s.resource_index(r[entity]);
      if (k < 0) throw IoError(path + ": unknown resource '" + r[entity] + "'");
      if (r[phase] == "operation") target = &s.resources[k].lcia_var;
    }
    if (target == nullptr) {
      throw IoError(path + ": bad kind/phase '" + r[kind] + "/" + r[phase] + "'");
    }
    target->status = parse_status(r[status]);
    if (!r[indicator].empty()) target->values[r[indicator]] = parse_number(r[value]);
  }
}

}  // namespace lcaes::core
