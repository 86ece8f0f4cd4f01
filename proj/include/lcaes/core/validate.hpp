#pragma once

#include <string>
#include <vector>

#include "lcaes/core/model.hpp"

namespace lcaes::core {

struct Diagnostic {
  std::string entity;
  std::string rule;
  std::string detail;

  std::string to_string() const { return entity + ": " + rule + (detail.empty() ? "" : " (" + detail + ")"); }
};

/// Empty iff every invariant holds and every cross-reference resolves.
std::vector<Diagnostic> validate_scenario(const Scenario& s);

}  // namespace lcaes::core
