#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/lca/harmonize.hpp"

namespace lcaes::lca {

/// A layer a technology consumes inside the energy model.
struct EsInput {
  std::string layer;
  std::string cpc;
};

using EsInputs = std::map<std::string, std::vector<EsInput>>;

/// Input layers (negative conversion coefficient) of every technology.
EsInputs es_inputs(const core::Scenario& s);

struct DoubleCountingOptions {
  /// Also match background products whose code starts with the model code.
  bool cpc_prefix = false;
};

/// Zeroes the exchanges of each technology's operation column whose product
/// matches one of its model inputs. A market input that does not match is
/// expanded when some of its suppliers do: the matching suppliers are dropped
/// and the others are kept at their path shares, without renormalization.
/// Zeroed exchanges are appended to the log; model inputs that matched
/// nothing produce warnings.
ExtendedTechnosphere remove_double_counting(const ExtendedTechnosphere& ext, const TechnosphereDB& db,
                                            const EsInputs& inputs,
                                            const DoubleCountingOptions& options = {});

/// Zeroed entries and warnings as a JSON document.
std::string double_counting_log_json(const ExtendedTechnosphere& ext);

}  // namespace lcaes::lca
