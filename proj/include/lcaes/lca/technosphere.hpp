#pragma once

#include <Eigen/SparseCore>
#include <string>
#include <string_view>
#include <vector>

namespace lcaes::lca {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor>;
using Triplet = Eigen::Triplet<double>;

struct ProcessInfo {
  std::string id;
  std::string name;
  std::string unit;
  /// Product classification code of the reference product.
  std::string cpc;
  bool market = false;
};

/// Background inventory database. Exchanges follow the usual sign
/// convention: +1 reference product on the diagonal of A, inputs negative.
struct TechnosphereDB {
  std::vector<ProcessInfo> processes;
  std::vector<std::string> flows;
  std::vector<std::string> indicators;
  SparseMatrix A;  // processes x processes
  SparseMatrix B;  // flows x processes
  SparseMatrix C;  // indicators x flows

  int size() const { return static_cast<int>(processes.size()); }
  int process_index(std::string_view id) const;
  int indicator_index(std::string_view id) const;
};

/// Invariant violations (unit diagonal, matrix shapes, duplicate ids).
std::vector<std::string> check_database(const TechnosphereDB& db);

/// Flags processes whose name starts with "market for" or "market group for".
void flag_markets_by_name(TechnosphereDB& db);

/// Dense copy of a sparse matrix; for reporting and small fixtures.
Eigen::MatrixXd to_dense(const SparseMatrix& m);

}  // namespace lcaes::lca
