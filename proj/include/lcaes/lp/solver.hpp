#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcaes/lp/problem.hpp"

namespace lcaes::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string to_string(Status s);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

/// Simplex basis over structural columns followed by one logical per row.
struct Basis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  long iterations = 0;
  long nodes = 0;
  Basis basis;
  /// Row duals y and structural reduced costs c - A'y, in the caller's units.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  bool warm_start_fallback = false;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  double pivot_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double primal_tolerance = 1e-9;
  double feasibility_check_tolerance = 1e-7;
  int refactor_interval = 64;
  int degenerate_steps_before_bland = 50;
  long max_iterations = 200000;
  double integrality_tolerance = 1e-6;
  double absolute_gap = 1e-6;
  long max_nodes = 100000;

  /// Defaults with LCAES_MAX_ITERATIONS applied when set.
  static SolverOptions from_environment();
};

/// Pluggable LP/MILP backend.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual Solution solve(const Problem& p) = 0;
  /// Same contract as solve(); the basis only changes the starting point.
  virtual Solution warm_start(const Problem& p, const Basis& basis) = 0;
};

/// Built-in bounded-variable revised primal simplex. Integer columns are
/// handled by best-bound branch-and-bound on top of the LP relaxation.
class SimplexSolver final : public Solver {
 public:
  SimplexSolver() : SimplexSolver(SolverOptions::from_environment()) {}
  explicit SimplexSolver(SolverOptions options) : options_(options) {}

  Solution solve(const Problem& p) override;
  Solution warm_start(const Problem& p, const Basis& basis) override;

  const SolverOptions& options() const { return options_; }

 private:
  SolverOptions options_;
};

/// LP relaxation only; integrality flags are ignored.
Solution solve_relaxation(const Problem& p, const SolverOptions& options,
                          const Basis* warm = nullptr);

Solution branch_and_bound(const Problem& p, const SolverOptions& options,
                          const Basis* warm = nullptr);

std::unique_ptr<Solver> make_default_solver();

}  // namespace lcaes::lp
