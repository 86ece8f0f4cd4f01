#include "lcaes/lca/impact.hpp"

#include <Eigen/SparseLU>
#include <cmath>

#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"

namespace lcaes::lca {

namespace {

using LU = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;

double norm1(const SparseMatrix& A) {
  double best = 0.0;
  for (int j = 0; j < A.outerSize(); ++j) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator e(A, j); e; ++e) s += std::abs(e.value());
    best = std::max(best, s);
  }
  return best;
}

void factorize(const SparseMatrix& A, LU& lu) {
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success) throw DomainError("technosphere matrix is singular");
}

// Hager's method on the factorization; at most five sweeps.
double inverse_norm1(LU& lu, int n) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  double estimate = 0.0;
  int last = -1;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXd y = lu.solve(x);
    estimate = y.lpNorm<1>();
    if (!std::isfinite(estimate)) return estimate;
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const Eigen::VectorXd z = lu.transpose().solve(xi);
    int j = 0;
    z.cwiseAbs().maxCoeff(&j);
    if (std::abs(z[j]) <= z.dot(x) || j == last) break;
    x.setZero();
    x[j] = 1.0;
    last = j;
  }
  return estimate;
}

// Row then column scaling to unit max-abs entries, with power-of-two factors.
SparseMatrix equilibrated(const SparseMatrix& A) {
  const int n = static_cast<int>(A.rows());
  auto pow2 = [](double m) { return m > 0.0 ? std::exp2(-std::round(std::log2(m))) : 1.0; };
  Eigen::VectorXd rmax = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < A.outerSize(); ++j) {
    for (SparseMatrix::InnerIterator e(A, j); e; ++e) rmax[e.row()] = std::max(rmax[e.row()], std::abs(e.value()));
  }
  SparseMatrix out = A;
  for (int j = 0; j < out.outerSize(); ++j) {
    double cmax = 0.0;
    for (SparseMatrix::InnerIterator e(out, j); e; ++e) {
      e.valueRef() *= pow2(rmax[e.row()]);
      cmax = std::max(cmax, std::abs(e.value()));
    }
    const double c = pow2(cmax);
    for (SparseMatrix::InnerIterator e(out, j); e; ++e) e.valueRef() *= c;
  }
  return out;
}

void check_condition(const SparseMatrix& A, const ImpactOptions& options) {
  const double cond = condition_estimate(A);
  if (!std::isfinite(cond) || cond > options.max_condition) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", cond);
    throw DomainError(std::string("technosphere matrix is ill-conditioned (condition estimate ") + buf + ")");
  }
}

Eigen::MatrixXd scores(const ExtendedTechnosphere& ext, const SparseMatrix& C, const ImpactOptions& options,
                       bool parallel) {
  if (C.cols() != ext.B.rows()) throw DomainError("characterization matrix does not match elementary flows");
  LU lu;
  factorize(ext.A, lu);
  check_condition(ext.A, options);
  const SparseMatrix CB = C * ext.B;
  const int nt = static_cast<int>(ext.targets.size());
  const int n = ext.size();
  Eigen::MatrixXd R(C.rows(), nt);
#pragma omp parallel for schedule(static) if (parallel)
  for (int t = 0; t < nt; ++t) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    f[ext.column(t)] = 1.0;
    const Eigen::VectorXd s = lu.solve(f);
    R.col(t) = CB * s;
  }
  return R;
}

}  // namespace

double condition_estimate(const SparseMatrix& A) {
  const SparseMatrix b = equilibrated(A);
  LU lu;
  factorize(b, lu);
  return norm1(b) * inverse_norm1(lu, static_cast<int>(b.rows()));
}

Eigen::MatrixXd impact_scores(const ExtendedTechnosphere& ext, const SparseMatrix& C, const ImpactOptions& options) {
  return scores(ext, C, options, true);
}

Eigen::MatrixXd impact_scores_serial(const ExtendedTechnosphere& ext, const SparseMatrix& C,
                                     const ImpactOptions& options) {
  return scores(ext, C, options, false);
}

std::vector<DerivedCoefficient> derive_coefficients(const ExtendedTechnosphere& ext, const Eigen::MatrixXd& R,
                                                    const std::vector<std::string>& indicators) {
  if (R.cols() != static_cast<Eigen::Index>(ext.targets.size()) ||
      R.rows() != static_cast<Eigen::Index>(indicators.size())) {
    throw DomainError("impact matrix does not match targets and indicators");
  }
  std::vector<DerivedCoefficient> out;
  for (std::size_t t = 0; t < ext.targets.size(); ++t) {
    const auto& target = ext.targets[t];
    DerivedCoefficient d{target.spec.entity, target.spec.kind, target.spec.phase, {}};
    switch (target.state) {
      case TargetState::kMapped:
        d.values.status = core::Characterization::kCharacterized;
        for (std::size_t i = 0; i < indicators.size(); ++i) d.values.values[indicators[i]] = R(i, t);
        break;
      case TargetState::kNoInventory:
        d.values.status = core::Characterization::kNoInventory;
        for (const auto& ind : indicators) d.values.values[ind] = 0.0;
        break;
      case TargetState::kUnmapped:
        d.values.status = core::Characterization::kUncharacterized;
        break;
    }
    out.push_back(std::move(d));
  }
  return out;
}

void apply_coefficients(core::Scenario& s, const std::vector<DerivedCoefficient>& coefficients) {
  for (const auto& d : coefficients) {
    if (d.kind == EntityKind::kTechnology) {
      const int k = s.technology_index(d.entity);
      if (k < 0) throw DomainError("coefficients for unknown technology " + d.entity);
      (d.phase == Phase::kConstruction ? s.technologies[k].lcia_stat : s.technologies[k].lcia_var) = d.values;
    } else {
      const int k = s.resource_index(d.entity);
      if (k < 0) throw DomainError("coefficients for unknown resource " + d.entity);
      s.resources[k].lcia_var = d.values;
    }
  }
}

std::string coefficients_csv(const std::vector<DerivedCoefficient>& coefficients,
                             const std::vector<std::string>& indicators) {
  std::string out = "entity,kind,phase,indicator,value,status\n";
  for (const auto& d : coefficients) {
    const std::string head = d.entity + "," + to_string(d.kind) + "," + to_string(d.phase) + ",";
    const std::string status = core::to_string(d.values.status);
    if (d.values.status == core::Characterization::kUncharacterized) {
      out += head + ",0," + status + "\n";
      continue;
    }
    for (const auto& ind : indicators) out += head + ind + "," + io::format_number(d.values.get(ind)) + "," + status + "\n";
  }
  return out;
}

}  // namespace lcaes::lca
