#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lcaes/core/problem_builder.hpp"
#include "lcaes/lp/solver.hpp"
#include "lcaes/objectives/objectives.hpp"

namespace lcaes::moo {

using objectives::Objective;

inline constexpr int kImpactCount = 5;
using Weights = std::array<double, kImpactCount>;

/// A solved single-objective or reference run with every objective and
/// reporting category evaluated at its optimum.
struct SooRun {
  std::string label;
  lp::Status status = lp::Status::kInfeasible;
  std::vector<double> x;
  std::map<std::string, double> values;
  lp::Basis basis;
  long iterations = 0;
};

struct ObjectiveBounds {
  /// Keyed by objective name (COST, CF, ...).
  std::map<std::string, double> f_min;
  std::map<std::string, double> f_max;
};

struct ParetoPoint {
  int index = 0;
  Weights omega{};
  lp::Status status = lp::Status::kInfeasible;
  std::map<std::string, double> values;
  std::vector<double> x;
  long iterations = 0;
  bool warm_fallback = false;
  double solve_seconds = 0.0;
};

struct MooOptions {
  int samples = 64;
  double relaxation = 0.0;
  /// 0 keeps the OpenMP default.
  int workers = 0;
  std::uint64_t skip = 1;
  bool warm_start = true;
};

/// Owns the assembled constraint set of one scenario.
class Engine {
 public:
  explicit Engine(core::Scenario s, lp::SolverOptions options = lp::SolverOptions::from_environment());

  const core::Scenario& scenario() const { return s_; }
  const core::OptimizationProblem& problem() const { return base_; }

  /// Minimizes one objective and evaluates all others at its optimum.
  SooRun soo(Objective o) const;
  /// The six runs in objective order.
  std::vector<SooRun> soo_all() const;
  /// Cost-optimal operation with capacities fixed to the reference values;
  /// technologies absent from the reference are held at existing capacity.
  SooRun reference_run(const core::ReferenceRun& ref) const;

  /// f_min(i) from run i, f_max(i) as the largest value of i over all runs.
  static ObjectiveBounds bounds(const std::vector<SooRun>& runs);
  /// Right-hand side of the impact constraint for weight w.
  static double epsilon(const ObjectiveBounds& b, Objective o, double w, double relaxation);

  /// Basis of the cost optimum on the epsilon-constrained problem, used to
  /// warm start samples.
  lp::Basis warm_basis(const ObjectiveBounds& b, double relaxation) const;

  /// Minimizes cost under the five impact bounds given by omega.
  ParetoPoint epsilon_run(const ObjectiveBounds& b, const Weights& omega, double relaxation,
                          const lp::Basis* warm = nullptr, int index = 0) const;

  /// Samples in parallel; `sink` receives points in sample order as soon as
  /// every earlier sample is done.
  std::vector<ParetoPoint> run_moo(const ObjectiveBounds& b, const MooOptions& options,
                                   const std::function<void(const ParetoPoint&)>& sink = {}) const;
  /// Single-threaded reference for run_moo.
  std::vector<ParetoPoint> run_moo_serial(const ObjectiveBounds& b, const MooOptions& options,
                                          const std::function<void(const ParetoPoint&)>& sink = {}) const;

 private:
  lp::Problem epsilon_problem(const ObjectiveBounds& b, const Weights& omega, double relaxation) const;
  std::vector<Weights> weights(const MooOptions& options) const;

  core::Scenario s_;
  lp::SolverOptions options_;
  core::OptimizationProblem base_;
  objectives::LinearExpression cost_;
};

/// True when every impact value of an optimal point is within its bound plus
/// tol scaled by max(1, |bound|).
bool satisfies_epsilon(const ParetoPoint& p, const ObjectiveBounds& b, double relaxation, double tol = 1e-6);

}  // namespace lcaes::moo
