#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lcaes/analysis/report.hpp"
#include "lcaes/cli/stages.hpp"
#include "lcaes/core/scenario_io.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"
#include "lcaes/io/run_store.hpp"

using namespace lcaes;
namespace fs = std::filesystem;

namespace {

const std::string kDesk = std::string(LCAES_SOURCE_DIR) + "/data/desk";
const std::string kDeskDb = std::string(LCAES_SOURCE_DIR) + "/data/desk_db";

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("lcaes-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string str(const std::string& sub = "") const { return (sub.empty() ? path : path / sub).string(); }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LCAES_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) { return io::read_text(p.string()); }

void copy_scenario(const std::string& to) { fs::copy(kDesk, to, fs::copy_options::recursive); }

void pipeline(const io::RunStore& store, const std::string& run, const std::string& scenario, int samples,
              std::ostream& log) {
  cli::stage_lci(store, run, {scenario, kDeskDb, "", {}}, log);
  cli::stage_soo(store, run, scenario, log);
  cli::MooRequest m;
  m.options.samples = samples;
  cli::stage_moo(store, run, m, log);
  cli::stage_analyze(store, run, log);
  cli::stage_report(store, run, log);
}

std::vector<std::string> all_artifacts() {
  std::vector<std::string> out = {"manifest.json"};
  for (const char* stage : {"lci", "soo", "moo", "analyze", "report"}) {
    for (const auto& f : cli::stage_artifacts(stage)) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run_cli("validate --scenario " + kDesk) == 0);

  TempDir tmp("validate");
  CHECK(run_cli("validate --scenario " + tmp.str("nowhere")) == 2);

  copy_scenario(tmp.str("missing"));
  fs::remove(tmp.path / "missing" / "demands.csv");
  CHECK(run_cli("validate --scenario " + tmp.str("missing")) == 2);

  copy_scenario(tmp.str("broken"));
  {
    std::ofstream out(tmp.path / "broken" / "demands.csv", std::ios::app);
    out << "NO_SUCH_LAYER,households,10,1,0,0,0,0,0,0,0,0,0,0,0\n";
  }
  CHECK(run_cli("validate --scenario " + tmp.str("broken")) == 1);
  CHECK(run_cli("validate --scenario " + kDesk + " --bogus") == 2);
  CHECK(run_cli("") == 2);
}

TEST_CASE("broken cross reference is named") {
  TempDir tmp("xref");
  copy_scenario(tmp.str("s"));
  {
    std::ofstream out(tmp.path / "s" / "demands.csv", std::ios::app);
    out << "NO_SUCH_LAYER,households,10,1,0,0,0,0,0,0,0,0,0,0,0\n";
  }
  const auto diags = cli::validate_dir(tmp.str("s"));
  REQUIRE_FALSE(diags.empty());
  bool named = false;
  for (const auto& d : diags) named = named || d.to_string().find("NO_SUCH_LAYER") != std::string::npos;
  CHECK(named);
}

TEST_CASE("empty mapping leaves every entity uncharacterized") {
  TempDir tmp("emptymap");
  const auto map = tmp.str("mapping.csv");
  {
    const auto text = slurp(fs::path(kDeskDb) / "mapping.csv");
    io::write_text(map, text.substr(0, text.find('\n') + 1));
  }
  const io::RunStore store(tmp.str("runs"));
  std::ostringstream log;
  cli::stage_lci(store, "r", {kDesk, kDeskDb, map, {}}, log);
  const auto t = io::parse_csv(store.read("r", "lci/lcia_coefficients.csv"));
  const int status = t.require("status", "coefficients");
  const int value = t.require("value", "coefficients");
  REQUIRE_FALSE(t.rows.empty());
  for (const auto& row : t.rows) {
    CHECK(row[status] == "uncharacterized");
    CHECK(io::parse_number(row[value]) == 0.0);
  }
  const auto s = core::load_scenario(kDesk);
  for (const auto& tech : s.technologies) {
    CHECK(log.str().find(tech.id + " (construction): no mapping, uncharacterized") != std::string::npos);
  }
  CHECK_THROWS_AS(cli::stage_soo(store, "r", kDesk, log), DomainError);
}

TEST_CASE("stages refuse a changed scenario") {
  TempDir tmp("stale");
  const auto scen = tmp.str("s");
  copy_scenario(scen);
  const io::RunStore store(tmp.str("runs"));
  std::ostringstream log;
  cli::stage_lci(store, "r", {scen, kDeskDb, "", {}}, log);
  {
    std::ofstream out(tmp.path / "s" / "demands.csv", std::ios::app);
    out << "# edited\n";
  }
  CHECK_THROWS_WITH_AS(cli::stage_soo(store, "r", scen, log),
                       doctest::Contains("re-run the pipeline under a new --run id"), DomainError);
  CHECK(run_cli("--out " + tmp.str("runs") + " soo --scenario " + scen + " --run r") == 1);
}

TEST_CASE("scenario hash follows file bytes") {
  TempDir tmp("hash");
  const auto scen = tmp.str("s");
  copy_scenario(scen);
  const auto h0 = io::scenario_hash(scen);
  CHECK(h0 == io::scenario_hash(kDesk));
  const auto demands = tmp.path / "s" / "demands.csv";
  const auto text = slurp(demands);
  io::write_text(demands.string(), text + " ");
  CHECK(io::scenario_hash(scen) != h0);
  io::write_text(demands.string(), text);
  CHECK(io::scenario_hash(scen) == h0);
  CHECK(cli::default_run_id(scen) == "run-" + h0.substr(0, 12));
}

TEST_CASE("one writer per run directory") {
  TempDir tmp("lock");
  const io::RunStore store(tmp.str("runs"));
  std::ostringstream log;
  cli::stage_lci(store, "r", {kDesk, kDeskDb, "", {}}, log);
  {
    io::RunLock held(store.run_dir("r"));
    CHECK_THROWS_WITH_AS(cli::stage_soo(store, "r", kDesk, log), doctest::Contains("locked"), IoError);
    CHECK_THROWS_AS(io::RunLock(store.run_dir("r")), IoError);
  }
  CHECK_NOTHROW(cli::stage_soo(store, "r", kDesk, log));
  CHECK_FALSE(fs::exists(fs::path(store.run_dir("r")) / ".lock"));
}

TEST_CASE("stage ordering and unknown runs") {
  TempDir tmp("order");
  const io::RunStore store(tmp.str("runs"));
  std::ostringstream log;
  cli::MooRequest m;
  CHECK_THROWS_AS(cli::stage_moo(store, "nope", m, log), IoError);
  CHECK(run_cli("--out " + tmp.str("runs") + " analyze --run nope") == 2);
  cli::stage_lci(store, "r", {kDesk, kDeskDb, "", {}}, log);
  CHECK_THROWS_WITH_AS(cli::stage_moo(store, "r", m, log), doctest::Contains("no soo stage"), DomainError);
  cli::stage_soo(store, "r", kDesk, log);
  m.options.samples = 0;
  CHECK_THROWS_WITH_AS(cli::stage_moo(store, "r", m, log), "n_samples >= 1 required", DomainError);
  CHECK(run_cli("--out " + tmp.str("runs") + " moo --run r --samples 0") == 1);
  CHECK_THROWS_AS(cli::stage_analyze(store, "r", log), DomainError);
}

TEST_CASE("full pipeline is idempotent and byte-reproducible") {
  TempDir tmp("pipeline");
  const io::RunStore a(tmp.str("a"));
  const io::RunStore b(tmp.str("b"));
  std::ostringstream log;
  pipeline(a, "r", kDesk, 12, log);
  pipeline(b, "r", kDesk, 12, log);
  for (const auto& f : all_artifacts()) {
    INFO(f);
    REQUIRE(fs::exists(a.path("r", f)));
    CHECK(slurp(a.path("r", f)) == slurp(b.path("r", f)));
  }

  const auto before = slurp(a.path("r", "moo/pareto_points.csv"));
  const auto stamp = fs::last_write_time(a.path("r", "moo/pareto_points.csv"));
  std::ostringstream again;
  pipeline(a, "r", kDesk, 12, again);
  CHECK(again.str().find("already complete") != std::string::npos);
  CHECK(slurp(a.path("r", "moo/pareto_points.csv")) == before);
  CHECK(fs::last_write_time(a.path("r", "moo/pareto_points.csv")) == stamp);

  cli::MooRequest other;
  other.options.samples = 13;
  CHECK_THROWS_WITH_AS(cli::stage_moo(a, "r", other, log), doctest::Contains("new --run id"), DomainError);
}

TEST_CASE("stored artifacts round-trip") {
  TempDir tmp("roundtrip");
  const io::RunStore store(tmp.str("runs"));
  std::ostringstream log;
  pipeline(store, "r", kDesk, 12, log);

  const auto runs = cli::read_soo_runs(store, "r");
  REQUIRE(runs.size() == 7);
  CHECK(runs.back().label == "reference_2020");
  const auto bounds = cli::read_bounds(store, "r");
  for (const auto& r : runs) {
    if (r.label == "reference_2020") continue;
    CHECK(bounds.f_min.at(r.label) == r.values.at(r.label));
  }

  const auto points = cli::read_pareto_points(store, "r");
  REQUIRE(points.size() == 12);
  for (std::size_t i = 0; i < points.size(); ++i) CHECK(points[i].index == static_cast<int>(i));

  for (const char* stage : {"lci", "soo", "moo", "analyze"}) {
    for (const auto& f : cli::stage_artifacts(stage)) {
      if (f.size() < 4 || f.substr(f.size() - 4) != ".csv") continue;
      INFO(f);
      const auto text = store.read("r", f);
      const auto t = io::parse_csv(text, f);
      CHECK(io::to_csv(t) == text);
      for (const auto& row : t.rows) {
        for (const auto& cell : row) {
          char* end = nullptr;
          const double v = std::strtod(cell.c_str(), &end);
          if (!cell.empty() && end == cell.c_str() + cell.size()) CHECK(io::format_number(v) == cell);
        }
      }
    }
  }

  const auto corr = analysis::parse_correlation(store.read("r", "analysis/correlation_r.csv"),
                                                store.read("r", "analysis/correlation_p.csv"), 0);
  CHECK(analysis::correlation_r_csv(corr) == store.read("r", "analysis/correlation_r.csv"));
  CHECK(analysis::correlation_p_csv(corr) == store.read("r", "analysis/correlation_p.csv"));
  const auto shift = analysis::parse_burden_shift(store.read("r", "analysis/burden_shift.csv"));
  CHECK(analysis::burden_shift_csv(shift) == store.read("r", "analysis/burden_shift.csv"));
}

TEST_CASE("numbers round-trip through their text form") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 4.9e-324, 1.7976931348623157e308}) {
    CHECK(io::parse_number(io::format_number(v)) == v);
  }
  CHECK(std::isinf(io::parse_number(io::format_number(lp::kInf))));
  CHECK_THROWS_AS(io::parse_number("1.5x"), IoError);
}

TEST_CASE("quoted fields survive a round trip") {
  io::CsvTable t;
  t.header = {"variable", "value"};
  t.rows = {{"F_t[PV,1]", "2"}, {"say \"hi\"", "3"}, {"plain", "4"}};
  const auto text = io::to_csv(t);
  CHECK(text.find("\"F_t[PV,1]\"") != std::string::npos);
  const auto back = io::parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK_THROWS_AS(io::parse_csv("a,b\n\"open,1\n"), IoError);
}
