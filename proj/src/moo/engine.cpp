#include "lcaes/moo/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

#include "lcaes/error.hpp"
#include "lcaes/moo/sobol.hpp"

namespace lcaes::moo {

using objectives::kAllObjectives;
using objectives::kImpactObjectives;
using objectives::to_string;

Engine::Engine(core::Scenario s, lp::SolverOptions options)
    : s_(std::move(s)),
      options_(options),
      base_(core::build_problem(s_)),
      cost_(objectives::cost_objective(s_, base_.index)) {}

namespace {

SooRun finish(const core::Scenario& s, const core::ModelIndex& ix, std::string label, lp::Solution sol) {
  SooRun r;
  r.label = std::move(label);
  r.status = sol.status;
  r.iterations = sol.iterations;
  if (sol.status == lp::Status::kOptimal) {
    r.values = objectives::evaluate_all(s, ix, sol.values);
    r.x = std::move(sol.values);
    r.basis = std::move(sol.basis);
  }
  return r;
}

}  // namespace

SooRun Engine::soo(Objective o) const {
  lp::Problem p = base_.lp;
  objectives::set_objective(p, o == Objective::kCost ? cost_ : objectives::objective_expression(s_, base_.index, o));
  lp::SimplexSolver solver(options_);
  return finish(s_, base_.index, to_string(o), solver.solve(p));
}

std::vector<SooRun> Engine::soo_all() const {
  std::vector<SooRun> out;
  for (auto o : kAllObjectives) out.push_back(soo(o));
  return out;
}

SooRun Engine::reference_run(const core::ReferenceRun& ref) const {
  lp::Problem p = base_.lp;
  for (const auto& [tech, cap] : ref.capacities) {
    if (s_.technology_index(tech) < 0) throw DomainError("reference names unknown technology " + tech);
  }
  for (std::size_t k = 0; k < s_.technologies.size(); ++k) {
    const auto& t = s_.technologies[k];
    auto it = ref.capacities.find(t.id);
    const double cap = it == ref.capacities.end() ? t.f_ext : it->second;
    p.set_bounds(base_.index.size[k], cap, cap);
  }
  objectives::set_objective(p, cost_);
  lp::SimplexSolver solver(options_);
  auto run = finish(s_, base_.index, ref.label, solver.solve(p));
  if (run.status != lp::Status::kOptimal) {
    throw DomainError("reference run '" + ref.label + "' cannot meet demand (" + lp::to_string(run.status) + ")");
  }
  return run;
}

ObjectiveBounds Engine::bounds(const std::vector<SooRun>& runs) {
  ObjectiveBounds b;
  for (const auto& r : runs) {
    if (r.status != lp::Status::kOptimal) {
      throw DomainError("single-objective run " + r.label + " is " + lp::to_string(r.status));
    }
  }
  for (auto o : kAllObjectives) {
    const std::string name = to_string(o);
    bool own = false;
    double hi = -lp::kInf;
    for (const auto& r : runs) {
      const double v = r.values.at(name);
      hi = std::max(hi, v);
      if (r.label == name) {
        b.f_min[name] = v;
        own = true;
      }
    }
    if (!own) throw DomainError("no single-objective run for " + name);
    b.f_max[name] = hi;
  }
  return b;
}

double Engine::epsilon(const ObjectiveBounds& b, Objective o, double w, double relaxation) {
  const std::string name = to_string(o);
  return (w * b.f_max.at(name) + (1.0 - w) * b.f_min.at(name)) * (1.0 + relaxation);
}

lp::Problem Engine::epsilon_problem(const ObjectiveBounds& b, const Weights& omega, double relaxation) const {
  lp::Problem p = base_.lp;
  objectives::set_objective(p, cost_);
  for (int i = 0; i < kImpactCount; ++i) {
    const auto o = kImpactObjectives[i];
    const auto e = objectives::objective_expression(s_, base_.index, o);
    p.add_row("epsilon[" + to_string(o) + "]", e.terms, lp::RowSense::kLessEqual,
              epsilon(b, o, omega[i], relaxation) - e.constant);
  }
  return p;
}

lp::Basis Engine::warm_basis(const ObjectiveBounds& b, double relaxation) const {
  Weights ones;
  ones.fill(1.0);
  lp::SimplexSolver solver(options_);
  const auto sol = solver.solve(epsilon_problem(b, ones, relaxation));
  return sol.status == lp::Status::kOptimal ? sol.basis : lp::Basis{};
}

ParetoPoint Engine::epsilon_run(const ObjectiveBounds& b, const Weights& omega, double relaxation,
                                const lp::Basis* warm, int index) const {
  ParetoPoint pt;
  pt.index = index;
  pt.omega = omega;
  const auto p = epsilon_problem(b, omega, relaxation);
  lp::SimplexSolver solver(options_);
  const auto start = std::chrono::steady_clock::now();
  auto sol = warm != nullptr && !warm->empty() ? solver.warm_start(p, *warm) : solver.solve(p);
  pt.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pt.status = sol.status;
  pt.iterations = sol.iterations;
  pt.warm_fallback = sol.warm_start_fallback;
  if (sol.status == lp::Status::kOptimal) {
    pt.values = objectives::evaluate_all(s_, base_.index, sol.values);
    pt.x = std::move(sol.values);
  }
  return pt;
}

std::vector<Weights> Engine::weights(const MooOptions& options) const {
  if (options.samples < 1) throw DomainError("n_samples >= 1 required");
  std::vector<Weights> out;
  for (const auto& p : sobol_sequence(kImpactCount, options.samples, options.skip)) {
    Weights w;
    std::copy(p.begin(), p.end(), w.begin());
    out.push_back(w);
  }
  return out;
}

std::vector<ParetoPoint> Engine::run_moo(const ObjectiveBounds& b, const MooOptions& options,
                                         const std::function<void(const ParetoPoint&)>& sink) const {
  const auto ws = weights(options);
  const lp::Basis warm = options.warm_start ? warm_basis(b, options.relaxation) : lp::Basis{};
  const int n = static_cast<int>(ws.size());
  std::vector<ParetoPoint> out(n);
  std::vector<char> done(n, 0);
  int next = 0;
  std::exception_ptr failure;
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    ParetoPoint pt;
    std::exception_ptr err;
    try {
      pt = epsilon_run(b, ws[i], options.relaxation, &warm, i);
    } catch (...) {
      err = std::current_exception();
    }
#pragma omp critical(lcaes_moo_sink)
    {
      if (err && !failure) failure = err;
      out[i] = std::move(pt);
      done[i] = 1;
      while (!failure && next < n && done[next]) {
        try {
          if (sink) sink(out[next]);
        } catch (...) {
          failure = std::current_exception();
        }
        ++next;
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ParetoPoint> Engine::run_moo_serial(const ObjectiveBounds& b, const MooOptions& options,
                                                const std::function<void(const ParetoPoint&)>& sink) const {
  const auto ws = weights(options);
  const lp::Basis warm = options.warm_start ? warm_basis(b, options.relaxation) : lp::Basis{};
  std::vector<ParetoPoint> out;
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    out.push_back(epsilon_run(b, ws[i], options.relaxation, &warm, i));
    if (sink) sink(out.back());
  }
  return out;
}

bool satisfies_epsilon(const ParetoPoint& p, const ObjectiveBounds& b, double relaxation, double tol) {
  if (p.status != lp::Status::kOptimal) return true;
  for (int i = 0; i < kImpactCount; ++i) {
    const auto o = kImpactObjectives[i];
    const double bound = Engine::epsilon(b, o, p.omega[i], relaxation);
    if (p.values.at(to_string(o)) > bound + tol * std::max(1.0, std::abs(bound))) return false;
  }
  return true;
}

}  // namespace lcaes::moo
