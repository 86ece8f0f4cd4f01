#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/core/validate.hpp"
#include "lcaes/io/run_store.hpp"
#include "lcaes/lca/pipeline.hpp"
#include "lcaes/moo/engine.hpp"

namespace lcaes::cli {

/// "run-" plus the first 12 hex digits of the scenario hash.
std::string default_run_id(const std::string& scenario_dir);

/// Loads and validates a scenario directory. Throws IoError for missing or
/// malformed files.
std::vector<core::Diagnostic> validate_dir(const std::string& scenario_dir);

/// Scenario of a run, with the coefficients of its lci stage when present.
core::Scenario load_run_scenario(const io::RunStore& store, const std::string& run);

struct LciRequest {
  std::string scenario_dir;
  std::string db_dir;
  /// Empty selects <db_dir>/mapping.csv.
  std::string mapping;
  lca::LciOptions options;
};

struct MooRequest {
  moo::MooOptions options;
};

/// Each stage records itself in the run manifest. Re-running a completed
/// stage with the same parameters keeps the stored artifacts; different
/// parameters are refused. Progress and warnings go to `log`.
void stage_lci(const io::RunStore& store, const std::string& run, const LciRequest& request, std::ostream& log);
void stage_soo(const io::RunStore& store, const std::string& run, const std::string& scenario_dir,
               std::ostream& log);
void stage_moo(const io::RunStore& store, const std::string& run, const MooRequest& request, std::ostream& log);
void stage_analyze(const io::RunStore& store, const std::string& run, std::ostream& log);
void stage_report(const io::RunStore& store, const std::string& run, std::ostream& log);

/// Artifact paths each stage writes, relative to the run directory.
const std::vector<std::string>& stage_artifacts(const std::string& stage);

/// Stored SOO results: objective table rows and bounds.
struct StoredRun {
  std::string label;
  std::string status;
  std::map<std::string, double> values;
  std::vector<double> x;
};

std::vector<StoredRun> read_soo_runs(const io::RunStore& store, const std::string& run);
moo::ObjectiveBounds read_bounds(const io::RunStore& store, const std::string& run);

/// Stored MOO sample: weights, status, objective values and capacities.
struct StoredPoint {
  int index = 0;
  std::string status;
  moo::Weights omega{};
  std::map<std::string, double> values;
  std::map<std::string, double> capacities;
};

std::vector<StoredPoint> read_pareto_points(const io::RunStore& store, const std::string& run);

}  // namespace lcaes::cli
