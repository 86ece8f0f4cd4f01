#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lcaes/cli/stages.hpp"
#include "lcaes/error.hpp"
#include "lcaes/lp/problem.hpp"
#include "lcaes/lp/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace lcaes;
  CLI::App app{"Energy system optimization coupled with life cycle assessment"};
  app.require_subcommand(1);

  std::string scenario, db, mapping, run, out = io::RunStore::default_root();
  int samples = 64, workers = 0;
  double relaxation = 0.0;
  bool cpc_prefix = false;

  app.add_option("--out", out, "Run store root (default $LCAES_OUT or ./runs)");

  auto* validate = app.add_subcommand("validate", "Check a scenario directory");
  validate->add_option("--scenario", scenario, "Scenario directory")->required();

  auto* lci = app.add_subcommand("lci", "Derive impact coefficients from a background database");
  lci->add_option("--scenario", scenario, "Scenario directory")->required();
  lci->add_option("--db", db, "Background database directory")->required();
  lci->add_option("--mapping", mapping, "Mapping file (default <db>/mapping.csv)");
  lci->add_flag("--cpc-prefix", cpc_prefix, "Match product codes by prefix");
  lci->add_option("--run", run, "Run id (default derived from the scenario hash)");

  auto* soo = app.add_subcommand("soo", "Solve the six single-objective problems");
  soo->add_option("--scenario", scenario, "Scenario directory")->required();
  soo->add_option("--run", run, "Run id (default derived from the scenario hash)");

  auto* moo = app.add_subcommand("moo", "Sample the Pareto front with the epsilon-constraint method");
  auto* moo_scenario = moo->add_option("--scenario", scenario, "Scenario directory (to derive the run id)");
  auto* moo_run = moo->add_option("--run", run, "Run id");
  moo->add_option("--samples", samples, "Number of Sobol weight samples");
  moo->add_option("--relaxation", relaxation, "Relative relaxation of the impact bounds")->check(CLI::NonNegativeNumber);
  moo->add_option("--workers", workers, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  moo_scenario->excludes(moo_run);

  auto* analyze = app.add_subcommand("analyze", "Correlation, distribution and burden-shift tables");
  auto* an_scenario = analyze->add_option("--scenario", scenario, "Scenario directory (to derive the run id)");
  auto* an_run = analyze->add_option("--run", run, "Run id");
  an_scenario->excludes(an_run);

  auto* report = app.add_subcommand("report", "Scatter matrix, trend lines and summary");
  auto* rep_scenario = report->add_option("--scenario", scenario, "Scenario directory (to derive the run id)");
  auto* rep_run = report->add_option("--run", run, "Run id");
  rep_scenario->excludes(rep_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const io::RunStore store(out);
    auto run_id = [&]() -> std::string {
      if (!run.empty()) return run;
      if (scenario.empty()) throw IoError("either --run or --scenario is required");
      return cli::default_run_id(scenario);
    };
    if (validate->parsed()) {
      const auto diags = cli::validate_dir(scenario);
      for (const auto& d : diags) std::cerr << d.to_string() << "\n";
      if (!diags.empty()) return kDomain;
      std::cerr << "scenario " << scenario << " is valid\n";
    } else if (lci->parsed()) {
      cli::LciRequest req{scenario, db, mapping, {}};
      req.options.double_counting.cpc_prefix = cpc_prefix;
      const auto id = run_id();
      cli::stage_lci(store, id, req, std::cerr);
      std::cout << id << "\n";
    } else if (soo->parsed()) {
      const auto id = run_id();
      cli::stage_soo(store, id, scenario, std::cerr);
      std::cout << id << "\n";
    } else if (moo->parsed()) {
      cli::MooRequest req;
      req.options.samples = samples;
      req.options.relaxation = relaxation;
      req.options.workers = workers;
      const auto id = run_id();
      cli::stage_moo(store, id, req, std::cerr);
      std::cout << id << "\n";
    } else if (analyze->parsed()) {
      cli::stage_analyze(store, run_id(), std::cerr);
    } else if (report->parsed()) {
      cli::stage_report(store, run_id(), std::cerr);
    }
    return kOk;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const lp::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const lp::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
