#include "lcaes/lca/synthetic.hpp"

#include <random>
#include <string>

namespace lcaes::lca {

SyntheticCase synthetic_case(const SyntheticSpec& spec) {
  SyntheticCase out;
  auto& db = out.db;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = spec.processes;

  for (int i = 0; i < n; ++i) {
    db.processes.push_back({"P" + std::to_string(i), "process " + std::to_string(i), "unit",
                            "C" + std::to_string(i % 17), false});
  }
  for (int f = 0; f < spec.flows; ++f) db.flows.push_back("F" + std::to_string(f));
  for (int k = 0; k < spec.indicators; ++k) db.indicators.push_back("I" + std::to_string(k));

  const double p_entry = std::min(1.0, spec.inputs_per_process / std::max(1, n - 1));
  std::vector<Triplet> a;
  for (int j = 0; j < n; ++j) {
    a.emplace_back(j, j, 1.0);
    std::vector<std::pair<int, double>> col;
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == j || unit(rng) >= p_entry) continue;
      const double v = unit(rng);
      col.emplace_back(i, v);
      mass += v;
    }
    const double scale = mass > 0.0 ? spec.column_mass * unit(rng) / mass : 0.0;
    for (const auto& [i, v] : col) a.emplace_back(i, j, -v * scale);
  }
  db.A.resize(n, n);
  db.A.setFromTriplets(a.begin(), a.end());

  std::vector<Triplet> b;
  for (int j = 0; j < n; ++j)
    for (int f = 0; f < spec.flows; ++f)
      if (unit(rng) < 0.3) b.emplace_back(f, j, unit(rng) * 10.0);
  db.B.resize(spec.flows, n);
  db.B.setFromTriplets(b.begin(), b.end());

  std::vector<Triplet> c;
  for (int k = 0; k < spec.indicators; ++k)
    for (int f = 0; f < spec.flows; ++f)
      if (unit(rng) < 0.5) c.emplace_back(k, f, unit(rng));
  db.C.resize(spec.indicators, spec.flows);
  db.C.setFromTriplets(c.begin(), c.end());

  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < spec.technologies; ++t) {
    const std::string id = "T" + std::to_string(t);
    for (auto phase : {Phase::kConstruction, Phase::kOperation}) {
      out.targets.push_back({id, EntityKind::kTechnology, phase});
      out.mapping.push_back({id, phase, db.processes[pick(rng)].id, 0.5 + unit(rng) * 2.0});
    }
  }
  return out;
}

}  // namespace lcaes::lca
