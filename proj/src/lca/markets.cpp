#include "lcaes/lca/markets.hpp"

#include <algorithm>
#include <map>

namespace lcaes::lca {

namespace {

std::string describe(const std::vector<std::string>& cycle) {
  std::string out;
  for (const auto& id : cycle) out += (out.empty() ? "" : " -> ") + id;
  return out;
}

struct Expander {
  const TechnosphereDB& db;
  std::vector<int> path;
  std::vector<Leaf> leaves;
  std::map<int, std::size_t> position;

  void visit(int p, double share) {
    if (!db.processes[p].market) {
      auto [it, fresh] = position.emplace(p, leaves.size());
      if (fresh) {
        leaves.push_back({p, share});
      } else {
        leaves[it->second].share += share;
      }
      return;
    }
    if (auto it = std::find(path.begin(), path.end(), p); it != path.end()) {
      std::vector<std::string> cycle;
      for (; it != path.end(); ++it) cycle.push_back(db.processes[*it].id);
      cycle.push_back(db.processes[p].id);
      throw MarketCycleError(std::move(cycle));
    }
    path.push_back(p);
    for (SparseMatrix::InnerIterator e(db.A, p); e; ++e) {
      const int k = static_cast<int>(e.row());
      if (k == p || e.value() >= 0.0) continue;
      visit(k, share * -e.value());
    }
    path.pop_back();
  }
};

}  // namespace

MarketCycleError::MarketCycleError(std::vector<std::string> cycle)
    : DomainError("market cycle: " + describe(cycle)), cycle_(std::move(cycle)) {}

std::vector<Leaf> expand_markets(const TechnosphereDB& db, int process) {
  if (process < 0 || process >= db.size()) throw DomainError("expand_markets: process index out of range");
  Expander ex{db, {}, {}, {}};
  ex.visit(process, 1.0);
  return std::move(ex.leaves);
}

}  // namespace lcaes::lca
