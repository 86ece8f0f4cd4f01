#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/lca/harmonize.hpp"

namespace lcaes::lca {

struct ImpactOptions {
  /// Refuse systems whose condition_estimate exceeds this.
  double max_condition = 1e12;
};

/// Hager/Higham estimate of the 1-norm condition number of A after row and
/// column equilibration, so the value does not depend on process units.
/// Throws DomainError when A is singular.
double condition_estimate(const SparseMatrix& A);

/// Impact score per indicator (rows) and target (columns): for target j,
/// solve A s = e_j on the foreground column and return C B s. Targets are
/// solved in parallel over a shared factorization.
Eigen::MatrixXd impact_scores(const ExtendedTechnosphere& ext, const SparseMatrix& C,
                              const ImpactOptions& options = {});

/// Single-threaded reference for impact_scores; identical output.
Eigen::MatrixXd impact_scores_serial(const ExtendedTechnosphere& ext, const SparseMatrix& C,
                                     const ImpactOptions& options = {});

struct DerivedCoefficient {
  std::string entity;
  EntityKind kind = EntityKind::kTechnology;
  Phase phase = Phase::kOperation;
  core::ImpactCoefficients values;
};

/// One entry per target. Mapped targets are characterized with every
/// indicator; targets without inventory carry zeros; unmapped targets stay
/// uncharacterized.
std::vector<DerivedCoefficient> derive_coefficients(const ExtendedTechnosphere& ext, const Eigen::MatrixXd& R,
                                                    const std::vector<std::string>& indicators);

/// Copies coefficients into the matching technologies and resources.
void apply_coefficients(core::Scenario& s, const std::vector<DerivedCoefficient>& coefficients);

/// lcia_coefficients.csv text (entity,kind,phase,indicator,value,status).
std::string coefficients_csv(const std::vector<DerivedCoefficient>& coefficients,
                             const std::vector<std::string>& indicators);

}  // namespace lcaes::lca
