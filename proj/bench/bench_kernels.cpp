// Serial reference against the OpenMP kernel for the two parallel hot spots:
// per-target impact solves and epsilon-constraint sampling.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "lcaes/core/scenario_io.hpp"
#include "lcaes/lca/database_io.hpp"
#include "lcaes/lca/impact.hpp"
#include "lcaes/lca/pipeline.hpp"
#include "lcaes/lca/synthetic.hpp"
#include "lcaes/moo/engine.hpp"

using namespace lcaes;

namespace {

struct ImpactCase {
  lca::SyntheticCase c;
  lca::ExtendedTechnosphere ext;
};

const ImpactCase& impact_case(int processes) {
  static std::map<int, ImpactCase> cache;
  auto it = cache.find(processes);
  if (it == cache.end()) {
    lca::SyntheticSpec spec;
    spec.processes = processes;
    spec.technologies = processes / 10;
    spec.flows = 40;
    spec.indicators = 20;
    spec.seed = 42;
    ImpactCase ic{lca::synthetic_case(spec), {}};
    ic.ext = lca::harmonize(ic.c.db, ic.c.mapping, ic.c.targets);
    it = cache.emplace(processes, std::move(ic)).first;
  }
  return it->second;
}

void BM_ImpactScoresSerial(benchmark::State& state) {
  const auto& ic = impact_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lca::impact_scores_serial(ic.ext, ic.c.db.C));
}

void BM_ImpactScoresParallel(benchmark::State& state) {
  const auto& ic = impact_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lca::impact_scores(ic.ext, ic.c.db.C));
}

struct MooCase {
  moo::Engine engine;
  moo::ObjectiveBounds bounds;
};

const MooCase& moo_case() {
  static const MooCase mc = [] {
    const std::string root = LCAES_SOURCE_DIR;
    auto s = core::load_scenario(root + "/data/desk");
    const auto db = lca::load_database(root + "/data/desk_db");
    const auto result = lca::run_lci(s, db, lca::load_mapping(root + "/data/desk_db/mapping.csv"));
    lca::apply_coefficients(s, result.coefficients);
    moo::Engine e(s);
    auto b = moo::Engine::bounds(e.soo_all());
    return MooCase{std::move(e), std::move(b)};
  }();
  return mc;
}

moo::MooOptions moo_options(int samples) {
  moo::MooOptions o;
  o.samples = samples;
  return o;
}

void BM_RunMooSerial(benchmark::State& state) {
  const auto& mc = moo_case();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc.engine.run_moo_serial(mc.bounds, moo_options(static_cast<int>(state.range(0)))));
  }
}

void BM_RunMooParallel(benchmark::State& state) {
  const auto& mc = moo_case();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc.engine.run_moo(mc.bounds, moo_options(static_cast<int>(state.range(0)))));
  }
}

}  // namespace

BENCHMARK(BM_ImpactScoresSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImpactScoresParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunMooSerial)->Arg(16)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_RunMooParallel)->Arg(16)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
