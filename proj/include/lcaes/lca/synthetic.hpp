#pragma once

#include <cstdint>
#include <vector>

#include "lcaes/lca/harmonize.hpp"
#include "lcaes/lca/technosphere.hpp"

namespace lcaes::lca {

struct SyntheticSpec {
  int processes = 50;
  int flows = 12;
  int indicators = 5;
  /// Foreground technologies, each mapped in both phases.
  int technologies = 5;
  /// Expected off-diagonal inputs per process column.
  double inputs_per_process = 3.0;
  /// Upper bound on the summed input amounts of one column; below 1 keeps
  /// A column diagonally dominant and well conditioned.
  double column_mass = 0.6;
  std::uint64_t seed = 1;
};

struct SyntheticCase {
  TechnosphereDB db;
  std::vector<TargetSpec> targets;
  std::vector<MappingEntry> mapping;
};

/// Random background database with non-negative B and C plus a mapping of
/// synthetic technologies "T0", "T1", ... onto random processes.
SyntheticCase synthetic_case(const SyntheticSpec& spec);

}  // namespace lcaes::lca
