#pragma once

#include <string>
#include <vector>

#include "lcaes/error.hpp"
#include "lcaes/lca/technosphere.hpp"

namespace lcaes::lca {

struct Leaf {
  int process = -1;
  double share = 0.0;
};

class MarketCycleError : public DomainError {
 public:
  MarketCycleError(std::vector<std::string> cycle);
  /// Process ids along the cycle; the first id is repeated at the end.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Depth-first expansion of a market into its non-market suppliers. Shares
/// are the input amounts of each market multiplied along the path; a
/// non-market process expands to itself with share 1. Leaves reached along
/// several paths are merged at their first position.
std::vector<Leaf> expand_markets(const TechnosphereDB& db, int process);

}  // namespace lcaes::lca
