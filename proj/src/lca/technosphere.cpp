#include "lcaes/lca/technosphere.hpp"

#include <cmath>
#include <set>

namespace lcaes::lca {

int TechnosphereDB::process_index(std::string_view id) const {
  for (std::size_t i = 0; i < processes.size(); ++i)
    if (processes[i].id == id) return static_cast<int>(i);
  return -1;
}

int TechnosphereDB::indicator_index(std::string_view id) const {
  for (std::size_t i = 0; i < indicators.size(); ++i)
    if (indicators[i] == id) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> check_database(const TechnosphereDB& db) {
  std::vector<std::string> out;
  const int n = db.size();
  if (db.A.rows() != n || db.A.cols() != n) out.push_back("A is not square over the process list");
  if (db.B.rows() != static_cast<Eigen::Index>(db.flows.size()) || db.B.cols() != n)
    out.push_back("B does not match flows x processes");
  if (db.C.rows() != static_cast<Eigen::Index>(db.indicators.size()) ||
      db.C.cols() != static_cast<Eigen::Index>(db.flows.size()))
    out.push_back("C does not match indicators x flows");
  std::set<std::string> ids;
  for (const auto& p : db.processes)
    if (!ids.insert(p.id).second) out.push_back("duplicate process " + p.id);
  if (db.A.rows() == n && db.A.cols() == n) {
    for (int j = 0; j < n; ++j) {
      if (db.A.coeff(j, j) != 1.0) out.push_back("diagonal of " + db.processes[j].id + " is not 1");
    }
  }
  return out;
}

void flag_markets_by_name(TechnosphereDB& db) {
  for (auto& p : db.processes) {
    if (p.name.rfind("market for", 0) == 0 || p.name.rfind("market group for", 0) == 0) p.market = true;
  }
}

Eigen::MatrixXd to_dense(const SparseMatrix& m) { return Eigen::MatrixXd(m); }

}  // namespace lcaes::lca
