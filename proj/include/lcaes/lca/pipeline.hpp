#pragma once

#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/lca/double_counting.hpp"
#include "lcaes/lca/impact.hpp"

namespace lcaes::lca {

struct LciOptions {
  DoubleCountingOptions double_counting;
  ImpactOptions impact;
  bool parallel = true;
};

struct LciResult {
  ExtendedTechnosphere extended;   // before double-counting removal
  ExtendedTechnosphere corrected;  // A*
  Eigen::MatrixXd scores;          // indicators x targets
  std::vector<DerivedCoefficient> coefficients;
};

/// harmonize, remove_double_counting, impact_scores and derive_coefficients
/// over every technology phase and resource of the scenario.
LciResult run_lci(const core::Scenario& s, const TechnosphereDB& db, const std::vector<MappingEntry>& mapping,
                  const LciOptions& options = {});

}  // namespace lcaes::lca
