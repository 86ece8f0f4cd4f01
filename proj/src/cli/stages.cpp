#include "lcaes/cli/stages.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lcaes/analysis/burden_shift.hpp"
#include "lcaes/analysis/correlation.hpp"
#include "lcaes/analysis/distributions.hpp"
#include "lcaes/analysis/pareto.hpp"
#include "lcaes/analysis/report.hpp"
#include "lcaes/core/scenario_io.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"
#include "lcaes/lca/database_io.hpp"
#include "lcaes/lca/double_counting.hpp"
#include "lcaes/objectives/indicators.hpp"

namespace lcaes::cli {

namespace fs = std::filesystem;
using io::format_number;
using io::Json;
using io::parse_number;
using io::RunStore;

namespace {

std::vector<std::string> objective_names() {
  std::vector<std::string> out;
  for (auto o : objectives::kAllObjectives) out.push_back(objectives::to_string(o));
  return out;
}

std::vector<std::string> value_columns() {
  std::vector<std::string> out = {"COST"};
  for (const auto& ind : objectives::indicator_catalog()) out.push_back(ind.acronym);
  return out;
}

std::string absolute(const std::string& p) { return fs::weakly_canonical(fs::absolute(p)).string(); }

Json files_json(const std::string& stage) {
  Json a = Json::array();
  for (const auto& f : stage_artifacts(stage)) a.push_back(f);
  return a;
}

// Returns true when the stage is already complete with the same parameters.
bool completed(const Json& manifest, const std::string& stage, const Json& params, const std::string& run,
               std::ostream& log) {
  if (!manifest.contains(stage)) return false;
  const auto& done = manifest.at(stage);
  for (const auto& [key, value] : params.items()) {
    if (!done.contains(key) || done.at(key) != value) {
      throw DomainError("run " + run + " already holds a " + stage + " stage with " + key + "=" +
                        (done.contains(key) ? done.at(key).dump() : "unset") + "; use a new --run id for " + key +
                        "=" + value.dump());
    }
  }
  log << stage << ": run " << run << " already complete, keeping stored artifacts\n";
  return true;
}

void require_stage(const Json& manifest, const std::string& stage, const std::string& run) {
  if (!manifest.contains(stage)) {
    throw DomainError("run " + run + " has no " + stage + " stage; run `lcaes " + stage + "` first");
  }
}

Json open_run(const RunStore& store, const std::string& run, const std::string& scenario_dir) {
  Json initial;
  initial["run"] = run;
  initial["scenario_dir"] = absolute(scenario_dir);
  initial["scenario_hash"] = io::scenario_hash(scenario_dir);
  Json m = store.open_or_create(run, initial);
  if (m.at("scenario_dir") != initial.at("scenario_dir")) {
    throw DomainError("run " + run + " belongs to scenario " + m.at("scenario_dir").get<std::string>());
  }
  io::require_fresh(m, run);
  return m;
}

std::string objectives_csv(const std::vector<moo::SooRun>& runs) {
  io::CsvTable t;
  t.header = {"run", "status", "iterations"};
  const auto cols = value_columns();
  t.header.insert(t.header.end(), cols.begin(), cols.end());
  for (const auto& r : runs) {
    std::vector<std::string> row = {r.label, lp::to_string(r.status), std::to_string(r.iterations)};
    for (const auto& c : cols) row.push_back(r.values.count(c) ? format_number(r.values.at(c)) : "");
    t.rows.push_back(std::move(row));
  }
  return io::to_csv(t);
}

std::string solutions_csv(const lp::Problem& p, const std::vector<moo::SooRun>& runs) {
  io::CsvTable t;
  t.header = {"variable"};
  for (const auto& r : runs) t.header.push_back(r.label);
  for (int j = 0; j < p.num_variables(); ++j) {
    std::vector<std::string> row = {p.variable(j).name};
    for (const auto& r : runs) row.push_back(r.x.empty() ? "" : format_number(r.x[j]));
    t.rows.push_back(std::move(row));
  }
  return io::to_csv(t);
}

std::vector<std::string> capacity_columns(const core::Scenario& s) {
  std::vector<std::string> out;
  for (const auto& t : s.technologies) out.push_back("F[" + t.id + "]");
  return out;
}

}  // namespace

std::string default_run_id(const std::string& scenario_dir) {
  return "run-" + io::scenario_hash(scenario_dir).substr(0, 12);
}

std::vector<core::Diagnostic> validate_dir(const std::string& scenario_dir) {
  return core::validate_scenario(core::load_scenario(scenario_dir));
}

const std::vector<std::string>& stage_artifacts(const std::string& stage) {
  static const std::map<std::string, std::vector<std::string>> files = {
      {"lci", {"lci/lcia_coefficients.csv", "lci/double_counting_log.json"}},
      {"soo", {"soo/objectives.csv", "soo/bounds.csv", "soo/solutions.csv"}},
      {"moo", {"moo/pareto_points.csv", "moo/summary.json"}},
      {"analyze",
       {"analysis/correlation_r.csv", "analysis/correlation_p.csv", "analysis/distributions.csv",
        "analysis/modes.csv", "analysis/burden_shift.csv", "analysis/cost_composition.csv",
        "analysis/sector_breakdown.csv", "analysis/pareto_front.csv", "analysis/summary.json"}},
      {"report", {"report/scatter_matrix.svg", "report/trend_lines.csv", "report/summary.md"}},
  };
  auto it = files.find(stage);
  if (it == files.end()) throw DomainError("unknown stage " + stage);
  return it->second;
}

core::Scenario load_run_scenario(const RunStore& store, const std::string& run) {
  const Json m = store.read_manifest(run);
  auto s = core::load_scenario(m.at("scenario_dir").get<std::string>());
  if (m.contains("lci")) core::load_coefficients(s, store.path(run, "lci/lcia_coefficients.csv"));
  return s;
}

void stage_lci(const RunStore& store, const std::string& run, const LciRequest& request, std::ostream& log) {
  const std::string mapping =
      request.mapping.empty() ? (fs::path(request.db_dir) / "mapping.csv").string() : request.mapping;
  if (!fs::exists(mapping)) throw IoError("missing mapping file " + mapping);
  Json m = open_run(store, run, request.scenario_dir);
  io::RunLock lock(store.run_dir(run));
  Json params;
  params["db_dir"] = absolute(request.db_dir);
  params["mapping"] = absolute(mapping);
  params["db_hash"] = io::database_hash(request.db_dir, mapping);
  params["cpc_prefix"] = request.options.double_counting.cpc_prefix;
  if (completed(m, "lci", params, run, log)) return;

  const auto s = core::load_scenario(request.scenario_dir);
  const auto db = lca::load_database(request.db_dir);
  const auto entries = lca::load_mapping(mapping);
  const auto result = lca::run_lci(s, db, entries, request.options);
  for (const auto& w : result.corrected.warnings) log << "lci warning: " << w << "\n";
  store.write(run, "lci/lcia_coefficients.csv", lca::coefficients_csv(result.coefficients, db.indicators));
  store.write(run, "lci/double_counting_log.json", lca::double_counting_log_json(result.corrected));
  params["zeroed_entries"] = result.corrected.zeroed.size();
  params["warnings"] = result.corrected.warnings.size();
  params["files"] = files_json("lci");
  m["lci"] = params;
  store.write_manifest(run, m);
  log << "lci: " << result.coefficients.size() << " targets characterized, " << result.corrected.zeroed.size()
      << " double-counted entries removed\n";
}

void stage_soo(const RunStore& store, const std::string& run, const std::string& scenario_dir, std::ostream& log) {
  Json m = open_run(store, run, scenario_dir);
  io::RunLock lock(store.run_dir(run));
  if (completed(m, "soo", Json::object(), run, log)) return;

  auto s = load_run_scenario(store, run);
  const auto diags = core::validate_scenario(s);
  if (!diags.empty()) throw DomainError("scenario invalid: " + diags.front().to_string());
  moo::Engine engine(s);
  auto runs = engine.soo_all();
  for (const auto& r : runs) log << "soo " << r.label << ": " << lp::to_string(r.status) << "\n";
  const auto bounds = moo::Engine::bounds(runs);
  Json params;
  params["reference"] = nullptr;
  if (s.reference) {
    runs.push_back(engine.reference_run(*s.reference));
    params["reference"] = s.reference->label;
  }
  io::CsvTable b;
  b.header = {"objective", "f_min", "f_max"};
  for (const auto& name : objective_names()) {
    b.rows.push_back({name, format_number(bounds.f_min.at(name)), format_number(bounds.f_max.at(name))});
  }
  store.write(run, "soo/objectives.csv", objectives_csv(runs));
  store.write(run, "soo/bounds.csv", io::to_csv(b));
  store.write(run, "soo/solutions.csv", solutions_csv(engine.problem().lp, runs));
  params["files"] = files_json("soo");
  m["soo"] = params;
  store.write_manifest(run, m);
}

void stage_moo(const RunStore& store, const std::string& run, const MooRequest& request, std::ostream& log) {
  Json m = store.read_manifest(run);
  io::require_fresh(m, run);
  require_stage(m, "soo", run);
  if (request.options.samples < 1) throw DomainError("n_samples >= 1 required");
  io::RunLock lock(store.run_dir(run));
  Json params;
  params["samples"] = request.options.samples;
  params["relaxation"] = request.options.relaxation;
  params["skip"] = request.options.skip;
  params["warm_start"] = request.options.warm_start;
  if (completed(m, "moo", params, run, log)) return;

  const auto s = load_run_scenario(store, run);
  moo::Engine engine(s);
  const auto bounds = read_bounds(store, run);
  const auto caps = capacity_columns(s);
  const auto names = objective_names();

  io::CsvTable header;
  header.header = {"index", "status", "iterations", "warm_fallback"};
  for (auto o : objectives::kImpactObjectives) header.header.push_back("w_" + objectives::to_string(o));
  header.header.insert(header.header.end(), names.begin(), names.end());
  header.header.insert(header.header.end(), caps.begin(), caps.end());
  const auto partial = fs::path(store.path(run, "moo/pareto_points.csv.partial"));
  fs::create_directories(partial.parent_path());
  std::ofstream out(partial, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + partial.string());
  out << io::to_csv(header);
  const auto& ix = engine.problem().index;
  int optimal = 0, infeasible = 0, fallbacks = 0;
  auto sink = [&](const moo::ParetoPoint& p) {
    io::CsvTable t;
    std::vector<std::string> row = {std::to_string(p.index), lp::to_string(p.status), std::to_string(p.iterations),
                                    p.warm_fallback ? "1" : "0"};
    for (double w : p.omega) row.push_back(format_number(w));
    const bool ok = p.status == lp::Status::kOptimal;
    for (const auto& n : names) row.push_back(ok ? format_number(p.values.at(n)) : "");
    for (std::size_t k = 0; k < caps.size(); ++k) row.push_back(ok ? format_number(p.x[ix.size[k]]) : "");
    t.rows.push_back(std::move(row));
    std::string line = io::to_csv(t);
    out << line.substr(line.find('\n') + 1);
    out.flush();
    (ok ? optimal : infeasible) += 1;
    fallbacks += p.warm_fallback ? 1 : 0;
  };
  engine.run_moo(bounds, request.options, sink);
  out.close();
  fs::rename(partial, store.path(run, "moo/pareto_points.csv"));

  Json summary;
  summary["samples"] = request.options.samples;
  summary["relaxation"] = request.options.relaxation;
  summary["optimal"] = optimal;
  summary["infeasible"] = infeasible;
  summary["warm_start_fallbacks"] = fallbacks;
  store.write(run, "moo/summary.json", summary.dump(2) + "\n");
  log << "moo: " << optimal << " optimal, " << infeasible << " infeasible of " << request.options.samples << "\n";
  params["optimal"] = optimal;
  params["infeasible"] = infeasible;
  params["files"] = files_json("moo");
  m["moo"] = params;
  store.write_manifest(run, m);
}

std::vector<StoredRun> read_soo_runs(const RunStore& store, const std::string& run) {
  const auto obj = io::parse_csv(store.read(run, "soo/objectives.csv"), "soo/objectives.csv");
  const auto sol = io::parse_csv(store.read(run, "soo/solutions.csv"), "soo/solutions.csv");
  std::vector<StoredRun> out;
  for (const auto& row : obj.rows) {
    StoredRun r;
    r.label = row[0];
    r.status = row[1];
    for (std::size_t c = 3; c < obj.header.size(); ++c) {
      if (!row[c].empty()) r.values[obj.header[c]] = parse_number(row[c]);
    }
    const int col = sol.require(r.label, "soo/solutions.csv");
    for (const auto& srow : sol.rows) {
      if (!srow[col].empty()) r.x.push_back(parse_number(srow[col]));
    }
    out.push_back(std::move(r));
  }
  return out;
}

moo::ObjectiveBounds read_bounds(const RunStore& store, const std::string& run) {
  const auto t = io::parse_csv(store.read(run, "soo/bounds.csv"), "soo/bounds.csv");
  moo::ObjectiveBounds b;
  for (const auto& row : t.rows) {
    b.f_min[row[0]] = parse_number(row[1]);
    b.f_max[row[0]] = parse_number(row[2]);
  }
  return b;
}

std::vector<StoredPoint> read_pareto_points(const RunStore& store, const std::string& run) {
  const auto t = io::parse_csv(store.read(run, "moo/pareto_points.csv"), "moo/pareto_points.csv");
  std::vector<StoredPoint> out;
  for (const auto& row : t.rows) {
    StoredPoint p;
    p.index = std::stoi(row[0]);
    p.status = row[1];
    for (int i = 0; i < moo::kImpactCount; ++i) p.omega[i] = parse_number(row[4 + i]);
    for (std::size_t c = 4 + moo::kImpactCount; c < t.header.size(); ++c) {
      if (row[c].empty()) continue;
      const auto& name = t.header[c];
      (name.rfind("F[", 0) == 0 ? p.capacities : p.values)[name] = parse_number(row[c]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

void stage_analyze(const RunStore& store, const std::string& run, std::ostream& log) {
  Json m = store.read_manifest(run);
  io::require_fresh(m, run);
  require_stage(m, "soo", run);
  require_stage(m, "moo", run);
  io::RunLock lock(store.run_dir(run));
  if (completed(m, "analyze", Json::object(), run, log)) return;

  const auto s = load_run_scenario(store, run);
  const auto built = core::build_problem(s);
  const auto names = objective_names();
  const auto caps = capacity_columns(s);

  const auto points = read_pareto_points(store, run);
  std::vector<const StoredPoint*> optimal;
  for (const auto& p : points) {
    if (p.status == lp::to_string(lp::Status::kOptimal)) optimal.push_back(&p);
  }
  std::vector<std::vector<double>> objective_points;
  for (const auto* p : optimal) {
    auto& v = objective_points.emplace_back();
    for (const auto& n : names) v.push_back(p->values.at(n));
  }
  const auto front = analysis::pareto_filter(objective_points);
  if (front.size() < 3) {
    throw DomainError("analysis needs at least 3 non-dominated optimal samples, got " + std::to_string(front.size()));
  }

  std::vector<std::string> vars = names;
  vars.insert(vars.end(), caps.begin(), caps.end());
  std::vector<std::vector<double>> columns(vars.size());
  for (std::size_t i : front) {
    const auto* p = optimal[i];
    for (std::size_t v = 0; v < vars.size(); ++v) {
      columns[v].push_back(v < names.size() ? p->values.at(vars[v]) : p->capacities.at(vars[v]));
    }
  }
  const auto corr = analysis::pearson(vars, columns);
  std::vector<analysis::Distribution> dists;
  for (std::size_t v = 0; v < vars.size(); ++v) dists.push_back(analysis::distribution(vars[v], columns[v]));

  io::CsvTable pf;
  pf.header = {"index"};
  pf.header.insert(pf.header.end(), names.begin(), names.end());
  for (std::size_t i : front) {
    std::vector<std::string> row = {std::to_string(optimal[i]->index)};
    for (double v : objective_points[i]) row.push_back(format_number(v));
    pf.rows.push_back(std::move(row));
  }

  const auto runs = read_soo_runs(store, run);
  std::vector<analysis::RunValues> run_values;
  for (const auto& r : runs) run_values.push_back({r.label, r.values});
  analysis::BurdenShiftTable shift;
  Json reference = m.at("soo").at("reference");
  if (!reference.is_null()) {
    const auto label = reference.get<std::string>();
    auto it = std::find_if(run_values.begin(), run_values.end(), [&](const auto& r) { return r.label == label; });
    shift = analysis::burden_shift(run_values, *it, names);
  } else {
    log << "analyze: scenario defines no reference run, burden-shift table left empty\n";
    shift.objectives = names;
  }

  io::CsvTable cost;
  cost.header = {"run", "category", "investment", "maintenance", "operation", "total"};
  io::CsvTable sectors;
  sectors.header = {"run", "objective", "category", "share"};
  for (const auto& r : runs) {
    if (r.x.empty()) continue;
    for (const auto& c : analysis::cost_composition(s, built.index, r.x)) {
      cost.rows.push_back({r.label, c.category, format_number(c.investment), format_number(c.maintenance),
                           format_number(c.operation), format_number(c.investment + c.maintenance + c.operation)});
    }
    for (const auto& o : names) {
      for (const auto& [cat, share] : analysis::category_shares(s, built.index, r.x, o)) {
        sectors.rows.push_back({r.label, o, cat, format_number(share)});
      }
    }
  }

  Json summary;
  summary["samples"] = points.size();
  summary["optimal"] = optimal.size();
  summary["infeasible"] = points.size() - optimal.size();
  summary["non_dominated"] = front.size();
  summary["variables"] = corr.names;
  summary["dropped"] = corr.dropped;
  summary["histogram_binning"] = "Freedman-Diaconis, at least 10 bins";
  summary["statistics_over"] = "non-dominated optimal samples";

  store.write(run, "analysis/correlation_r.csv", analysis::correlation_r_csv(corr));
  store.write(run, "analysis/correlation_p.csv", analysis::correlation_p_csv(corr));
  store.write(run, "analysis/distributions.csv", analysis::distributions_csv(dists));
  store.write(run, "analysis/modes.csv", analysis::modes_csv(dists));
  store.write(run, "analysis/burden_shift.csv", analysis::burden_shift_csv(shift));
  store.write(run, "analysis/cost_composition.csv", io::to_csv(cost));
  store.write(run, "analysis/sector_breakdown.csv", io::to_csv(sectors));
  store.write(run, "analysis/pareto_front.csv", io::to_csv(pf));
  store.write(run, "analysis/summary.json", summary.dump(2) + "\n");
  for (const auto& d : corr.dropped) log << "analyze: dropped " << d << "\n";
  log << "analyze: " << front.size() << " non-dominated of " << optimal.size() << " optimal samples\n";
  Json params;
  params["samples"] = corr.samples;
  params["files"] = files_json("analyze");
  m["analyze"] = params;
  store.write_manifest(run, m);
}

void stage_report(const RunStore& store, const std::string& run, std::ostream& log) {
  Json m = store.read_manifest(run);
  io::require_fresh(m, run);
  require_stage(m, "analyze", run);
  io::RunLock lock(store.run_dir(run));
  if (completed(m, "report", Json::object(), run, log)) return;

  const auto corr = analysis::parse_correlation(store.read(run, "analysis/correlation_r.csv"),
                                                store.read(run, "analysis/correlation_p.csv"),
                                                m.at("analyze").at("samples").get<int>());
  const auto front = io::parse_csv(store.read(run, "analysis/pareto_front.csv"), "analysis/pareto_front.csv");
  std::set<int> keep;
  for (const auto& row : front.rows) keep.insert(std::stoi(row[0]));
  std::vector<std::vector<double>> columns(corr.names.size());
  for (const auto& p : read_pareto_points(store, run)) {
    if (!keep.count(p.index)) continue;
    for (std::size_t v = 0; v < corr.names.size(); ++v) {
      const auto& n = corr.names[v];
      columns[v].push_back(p.values.count(n) ? p.values.at(n) : p.capacities.at(n));
    }
  }
  std::vector<analysis::Distribution> dists;
  for (std::size_t v = 0; v < corr.names.size(); ++v) dists.push_back(analysis::distribution(corr.names[v], columns[v]));

  io::CsvTable trends;
  trends.header = {"x", "y", "slope", "intercept", "residual_se", "n", "band"};
  for (std::size_t i = 0; i < corr.names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto t = analysis::trend_line(columns[j], columns[i]);
      trends.rows.push_back({corr.names[j], corr.names[i], format_number(t.slope), format_number(t.intercept),
                             format_number(t.residual_se), std::to_string(t.n), "least-squares +-1.96 SE"});
    }
  }

  std::ostringstream md;
  md << "# Run " << run << "\n\n## Single-objective optima\n\n| run |";
  const auto names = objective_names();
  for (const auto& n : names) md << " " << n << " |";
  md << "\n|---|";
  for (std::size_t i = 0; i < names.size(); ++i) md << "---|";
  md << "\n";
  for (const auto& r : read_soo_runs(store, run)) {
    md << "| " << r.label << " |";
    for (const auto& n : names) md << " " << (r.values.count(n) ? format_number(r.values.at(n)) : "-") << " |";
    md << "\n";
  }
  const auto shift = analysis::parse_burden_shift(store.read(run, "analysis/burden_shift.csv"));
  if (!shift.runs.empty()) {
    md << "\n## Change against the reference (%)\n\n| run |";
    for (const auto& n : shift.objectives) md << " " << n << " |";
    md << "\n|---|";
    for (std::size_t i = 0; i < shift.objectives.size(); ++i) md << "---|";
    md << "\n";
    for (std::size_t r = 0; r < shift.runs.size(); ++r) {
      md << "| " << shift.runs[r] << " |";
      for (const auto& v : shift.percent[r]) {
        char buf[32];
        if (v) std::snprintf(buf, sizeof buf, "%.1f", *v);
        md << " " << (v ? buf : analysis::kUndefined) << " |";
      }
      md << "\n";
    }
  }
  md << "\nStatistics cover " << corr.samples << " non-dominated samples. Trend lines are least-squares fits with a "
     << "+-1.96 SE band of the mean response.\n";

  store.write(run, "report/scatter_matrix.svg", analysis::scatter_matrix_svg(corr.names, columns, corr, dists));
  store.write(run, "report/trend_lines.csv", io::to_csv(trends));
  store.write(run, "report/summary.md", md.str());
  Json params;
  params["files"] = files_json("report");
  m["report"] = params;
  store.write_manifest(run, m);
  log << "report: written to " << store.run_dir(run) << "/report\n";
}

}  // namespace lcaes::cli
