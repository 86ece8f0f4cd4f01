#include <cmath>
#include <queue>
#include <vector>

#include "lcaes/lp/solver.hpp"

namespace lcaes::lp {

namespace {

struct Node {
  double bound = 0.0;
  long id = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  Basis basis;
};

// Best-bound first; older nodes first on equal bounds for determinism.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

int first_fractional(const Problem& p, const std::vector<double>& x, double tol) {
  for (int j = 0; j < p.num_variables(); ++j) {
    if (!p.variable(j).integer) continue;
    if (std::abs(x[j] - std::round(x[j])) > tol) return j;
  }
  return -1;
}

void round_integers(const Problem& p, Solution& s) {
  for (int j = 0; j < p.num_variables(); ++j) {
    if (p.variable(j).integer) s.values[j] = std::round(s.values[j]);
  }
  s.objective = p.evaluate(s.values);
}

}  // namespace

Solution branch_and_bound(const Problem& p, const SolverOptions& options,
                          const Basis* warm) {
  Solution root = solve_relaxation(p, options, warm);
  root.nodes = 1;
  if (root.status != Status::kOptimal || !p.has_integers()) return root;
  if (first_fractional(p, root.values, options.integrality_tolerance) < 0) {
    round_integers(p, root);
    return root;
  }

  Problem work = p;
  Solution incumbent;
  incumbent.status = Status::kInfeasible;
  double best = kInf;
  long nodes = 1;
  long iterations = root.iterations;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  {
    Node n;
    n.bound = root.objective;
    n.id = 0;
    for (const auto& v : p.variables()) {
      n.lower.push_back(v.lower);
      n.upper.push_back(v.upper);
    }
    n.basis = root.basis;
    open.push(std::move(n));
  }
  long next_id = 1;

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.bound >= best - options.absolute_gap) continue;

    for (int j = 0; j < p.num_variables(); ++j) work.set_bounds(j, node.lower[j], node.upper[j]);
    Solution relax = node.id == 0 ? root : solve_relaxation(work, options, &node.basis);
    if (node.id != 0) {
      iterations += relax.iterations;
      ++nodes;
    }
    if (nodes > options.max_nodes) throw NumericalError("branch-and-bound node limit reached");
    if (relax.status == Status::kUnbounded) {
      relax.nodes = nodes;
      relax.iterations = iterations;
      return relax;
    }
    if (relax.status != Status::kOptimal) continue;
    if (relax.objective >= best - options.absolute_gap) continue;

    const int j = first_fractional(p, relax.values, options.integrality_tolerance);
    if (j < 0) {
      best = relax.objective;
      incumbent = std::move(relax);
      continue;
    }
    const double v = relax.values[j];
    Node down{relax.objective, next_id++, node.lower, node.upper, relax.basis};
    down.upper[j] = std::floor(v);
    Node up{relax.objective, next_id++, node.lower, node.upper, relax.basis};
    up.lower[j] = std::ceil(v);
    if (down.lower[j] <= down.upper[j]) open.push(std::move(down));
    if (up.lower[j] <= up.upper[j]) open.push(std::move(up));
  }

  incumbent.nodes = nodes;
  incumbent.iterations = iterations;
  if (incumbent.status == Status::kOptimal) round_integers(p, incumbent);
  return incumbent;
}

}  // namespace lcaes::lp
