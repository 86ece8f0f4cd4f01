// Bounded-variable revised primal simplex.
//
// The working form is  [A_s  -I] [x; r] = 0  where A_s is the row-scaled
// constraint matrix and r holds one logical per row carrying the row bounds.
// The basis inverse is kept dense (column-major) and updated in product form
// between periodic reinversions. Phase 1 minimizes the sum of bound
// violations of basic variables, so any nonsingular starting basis works,
// which is what makes warm starts after rhs changes cheap.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "lcaes/lp/solver.hpp"

namespace lcaes::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::kOptimal:
      return "Optimal";
    case Status::kInfeasible:
      return "Infeasible";
    case Status::kUnbounded:
      return "Unbounded";
  }
  return "Unknown";
}

SolverOptions SolverOptions::from_environment() {
  SolverOptions o;
  if (const char* cap = std::getenv("LCAES_MAX_ITERATIONS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0) o.max_iterations = v;
  }
  return o;
}

namespace {

class RevisedSimplex {
 public:
  RevisedSimplex(const Problem& p, const SolverOptions& opt)
      : problem_(p), opt_(opt), m_(p.num_rows()), n_(p.num_variables()),
        total_(m_ + n_) {
    build_scaled_matrix();
  }

  Solution run(const Basis* warm) {
    Solution sol;
    bool ok = false;
    if (warm != nullptr && !warm->empty()) {
      ok = load_basis(*warm) && invert();
      if (!ok) sol.warm_start_fallback = true;
    }
    if (!ok) {
      cold_basis();
      if (!invert()) throw NumericalError("logical basis is singular");
    }
    compute_basic_values();

    Status status = Status::kOptimal;
    for (int attempt = 0;; ++attempt) {
      status = iterate();
      if (status != Status::kOptimal) break;
      invert_or_throw();
      compute_basic_values();
      if (max_basic_violation() <= opt_.feasibility_check_tolerance) break;
      if (attempt >= 3) {
        throw NumericalError("simplex lost primal feasibility after reinversion");
      }
    }

    sol.status = status;
    sol.iterations = iterations_;
    sol.basis.status = status_;
    if (status == Status::kOptimal) extract(sol);
    return sol;
  }

 private:
  // ---- setup -------------------------------------------------------------

  void build_scaled_matrix() {
    row_scale_.assign(m_, 1.0);
    for (int i = 0; i < m_; ++i) {
      double big = 0.0;
      for (const auto& e : problem_.row(i).entries) big = std::max(big, std::abs(e.value));
      if (big > 0.0) row_scale_[i] = 1.0 / big;
    }
    std::vector<int> counts(n_ + 1, 0);
    for (int i = 0; i < m_; ++i)
      for (const auto& e : problem_.row(i).entries) ++counts[e.col + 1];
    col_start_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + counts[j + 1];
    row_index_.resize(col_start_[n_]);
    value_.resize(col_start_[n_]);
    std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
    for (int i = 0; i < m_; ++i) {
      for (const auto& e : problem_.row(i).entries) {
        const int k = fill[e.col]++;
        row_index_[k] = i;
        value_[k] = e.value * row_scale_[i];
      }
    }

    double cmax = 0.0;
    for (const auto& v : problem_.variables()) cmax = std::max(cmax, std::abs(v.cost));
    cost_scale_ = cmax > 0.0 ? cmax : 1.0;

    lower_.resize(total_);
    upper_.resize(total_);
    cost_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      const auto& v = problem_.variable(j);
      lower_[j] = v.lower;
      upper_[j] = v.upper;
      cost_[j] = v.cost / cost_scale_;
    }
    for (int i = 0; i < m_; ++i) {
      const auto& r = problem_.row(i);
      const double b = r.rhs * row_scale_[i];
      switch (r.sense) {
        case RowSense::kLessEqual:
          lower_[n_ + i] = -kInf;
          upper_[n_ + i] = b;
          break;
        case RowSense::kGreaterEqual:
          lower_[n_ + i] = b;
          upper_[n_ + i] = kInf;
          break;
        case RowSense::kEqual:
          lower_[n_ + i] = b;
          upper_[n_ + i] = b;
          break;
      }
    }
    x_.assign(total_, 0.0);
    status_.assign(total_, VarStatus::kAtLower);
    position_.assign(total_, -1);
    basic_.assign(m_, -1);
  }

  VarStatus resting_status(int j) const {
    if (std::isfinite(lower_[j])) return VarStatus::kAtLower;
    if (std::isfinite(upper_[j])) return VarStatus::kAtUpper;
    return VarStatus::kFree;
  }

  void place_nonbasic(int j) {
    switch (status_[j]) {
      case VarStatus::kAtLower:
        x_[j] = lower_[j];
        break;
      case VarStatus::kAtUpper:
        x_[j] = upper_[j];
        break;
      case VarStatus::kFree:
        x_[j] = 0.0;
        break;
      case VarStatus::kBasic:
        break;
    }
  }

  void cold_basis() {
    std::fill(position_.begin(), position_.end(), -1);
    for (int j = 0; j < n_; ++j) {
      status_[j] = resting_status(j);
      place_nonbasic(j);
    }
    for (int i = 0; i < m_; ++i) {
      status_[n_ + i] = VarStatus::kBasic;
      basic_[i] = n_ + i;
      position_[n_ + i] = i;
    }
  }

  bool load_basis(const Basis& b) {
    if (static_cast<int>(b.status.size()) != total_) return false;
    int count = 0;
    std::fill(position_.begin(), position_.end(), -1);
    for (int j = 0; j < total_; ++j) {
      VarStatus s = b.status[j];
      if (s == VarStatus::kBasic) {
        if (count >= m_) return false;
        basic_[count] = j;
        position_[j] = count++;
      } else {
        // Repair statuses that no longer match the bounds.
        if ((s == VarStatus::kAtLower && !std::isfinite(lower_[j])) ||
            (s == VarStatus::kAtUpper && !std::isfinite(upper_[j])) ||
            (s == VarStatus::kFree && (std::isfinite(lower_[j]) || std::isfinite(upper_[j])))) {
          s = resting_status(j);
        }
        status_[j] = s;
        place_nonbasic(j);
        continue;
      }
      status_[j] = VarStatus::kBasic;
    }
    return count == m_;
  }

  // ---- linear algebra ----------------------------------------------------

  template <typename F>
  void for_column(int j, F&& f) const {
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) f(row_index_[k], value_[k]);
    } else {
      f(j - n_, -1.0);
    }
  }

  double& binv(int i, int k) { return binv_[static_cast<std::size_t>(k) * m_ + i]; }
  double binv(int i, int k) const { return binv_[static_cast<std::size_t>(k) * m_ + i]; }

  // Gauss-Jordan on [B | I]; returns false when B is numerically singular.
  bool invert() {
    const std::size_t mm = static_cast<std::size_t>(m_) * m_;
    std::vector<double> a(mm, 0.0);  // row-major copy of B
    for (int p = 0; p < m_; ++p) {
      for_column(basic_[p], [&](int i, double v) { a[static_cast<std::size_t>(i) * m_ + p] = v; });
    }
    std::vector<double> inv(mm, 0.0);  // row-major
    for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = 1.0;

    for (int k = 0; k < m_; ++k) {
      int piv = -1;
      double best = 0.0;
      for (int i = k; i < m_; ++i) {
        const double v = std::abs(a[static_cast<std::size_t>(i) * m_ + k]);
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (piv < 0 || best < 1e-11) return false;
      if (piv != k) {
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv) * m_,
                         a.begin() + static_cast<std::ptrdiff_t>(piv + 1) * m_,
                         a.begin() + static_cast<std::ptrdiff_t>(k) * m_);
        std::swap_ranges(inv.begin() + static_cast<std::ptrdiff_t>(piv) * m_,
                         inv.begin() + static_cast<std::ptrdiff_t>(piv + 1) * m_,
                         inv.begin() + static_cast<std::ptrdiff_t>(k) * m_);
      }
      double* ak = &a[static_cast<std::size_t>(k) * m_];
      double* ik = &inv[static_cast<std::size_t>(k) * m_];
      const double d = 1.0 / ak[k];
      for (int c = 0; c < m_; ++c) {
        ak[c] *= d;
        ik[c] *= d;
      }
      for (int i = 0; i < m_; ++i) {
        if (i == k) continue;
        double* ai = &a[static_cast<std::size_t>(i) * m_];
        const double f = ai[k];
        if (f == 0.0) continue;
        double* ii = &inv[static_cast<std::size_t>(i) * m_];
        for (int c = k; c < m_; ++c) ai[c] -= f * ak[c];
        for (int c = 0; c < m_; ++c) ii[c] -= f * ik[c];
      }
    }
    // inv rows are indexed by basis position; store column-major.
    binv_.assign(mm, 0.0);
    for (int i = 0; i < m_; ++i)
      for (int k = 0; k < m_; ++k) binv(i, k) = inv[static_cast<std::size_t>(i) * m_ + k];
    since_refactor_ = 0;
    return true;
  }

  void invert_or_throw() {
    if (!invert()) throw NumericalError("basis became singular during reinversion");
  }

  void compute_basic_values() {
    std::vector<double> rhs(m_, 0.0);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
      const double xj = x_[j];
      for_column(j, [&](int i, double v) { rhs[i] -= v * xj; });
    }
    for (int p = 0; p < m_; ++p) x_[basic_[p]] = 0.0;
    for (int k = 0; k < m_; ++k) {
      if (rhs[k] == 0.0) continue;
      for (int p = 0; p < m_; ++p) x_[basic_[p]] += binv(p, k) * rhs[k];
    }
  }

  std::vector<double> ftran(int j) const {
    std::vector<double> alpha(m_, 0.0);
    for_column(j, [&](int r, double v) {
      const double* col = &binv_[static_cast<std::size_t>(r) * m_];
      for (int p = 0; p < m_; ++p) alpha[p] += v * col[p];
    });
    return alpha;
  }

  std::vector<double> btran(const std::vector<double>& cb) const {
    std::vector<double> y(m_, 0.0);
    for (int k = 0; k < m_; ++k) {
      const double* col = &binv_[static_cast<std::size_t>(k) * m_];
      double s = 0.0;
      for (int p = 0; p < m_; ++p) s += cb[p] * col[p];
      y[k] = s;
    }
    return y;
  }

  void pivot_update(int r, const std::vector<double>& alpha) {
    const double ar = alpha[r];
    for (int k = 0; k < m_; ++k) {
      double* col = &binv_[static_cast<std::size_t>(k) * m_];
      const double piv = col[r] / ar;
      if (piv == 0.0) {
        continue;
      }
      for (int p = 0; p < m_; ++p) col[p] -= alpha[p] * piv;
      col[r] = piv;
    }
  }

  // ---- simplex iterations ------------------------------------------------

  double tol_at(double bound) const {
    return opt_.primal_tolerance * std::max(1.0, std::abs(bound));
  }

  bool below(int j) const { return x_[j] < lower_[j] - tol_at(lower_[j]); }
  bool above(int j) const { return x_[j] > upper_[j] + tol_at(upper_[j]); }

  double max_basic_violation() const {
    double worst = 0.0;
    for (int p = 0; p < m_; ++p) {
      const int j = basic_[p];
      if (x_[j] < lower_[j]) worst = std::max(worst, (lower_[j] - x_[j]) / std::max(1.0, std::abs(lower_[j])));
      if (x_[j] > upper_[j]) worst = std::max(worst, (x_[j] - upper_[j]) / std::max(1.0, std::abs(upper_[j])));
    }
    return worst;
  }

  double reduced_cost(int j, const std::vector<double>& y, bool phase1) const {
    double d = phase1 ? 0.0 : cost_[j];
    for_column(j, [&](int i, double v) { d -= y[i] * v; });
    return d;
  }

  Status iterate() {
    int degenerate_run = 0;
    bool bland = false;
    std::vector<double> cb(m_);
    for (;;) {
      if (since_refactor_ >= opt_.refactor_interval) {
        invert_or_throw();
        compute_basic_values();
      }

      bool phase1 = false;
      for (int p = 0; p < m_; ++p) {
        const int j = basic_[p];
        if (below(j)) {
          cb[p] = -1.0;
          phase1 = true;
        } else if (above(j)) {
          cb[p] = 1.0;
          phase1 = true;
        } else {
          cb[p] = 0.0;
        }
      }
      if (!phase1) {
        for (int p = 0; p < m_; ++p) cb[p] = cost_[basic_[p]];
      }
      const std::vector<double> y = btran(cb);

      // Pricing: Dantzig, lowest index on ties; Bland under degeneracy.
      int enter = -1;
      int dir = 0;
      double best = 0.0;
      for (int j = 0; j < total_; ++j) {
        const VarStatus s = status_[j];
        if (s == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
        const double d = reduced_cost(j, y, phase1);
        int cand = 0;
        if (d < -opt_.optimality_tolerance && s != VarStatus::kAtUpper) cand = 1;
        if (d > opt_.optimality_tolerance && s != VarStatus::kAtLower) cand = -1;
        if (cand == 0) continue;
        if (bland) {
          enter = j;
          dir = cand;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          enter = j;
          dir = cand;
        }
      }
      if (enter < 0) return phase1 ? Status::kInfeasible : Status::kOptimal;

      if (++iterations_ > opt_.max_iterations) {
        throw NumericalError("simplex iteration limit reached (" +
                             std::to_string(opt_.max_iterations) + ")");
      }

      const std::vector<double> alpha = ftran(enter);

      // Ratio test with Harris two-pass selection.
      double harris = kInf;
      for (int p = 0; p < m_; ++p) {
        if (std::abs(alpha[p]) <= opt_.pivot_tolerance) continue;
        const double rate = -dir * alpha[p];
        const int j = basic_[p];
        const double bound = blocking_bound(j, rate);
        if (!std::isfinite(bound)) continue;
        const double slack = rate < 0 ? x_[j] - bound : bound - x_[j];
        harris = std::min(harris, (slack + tol_at(bound)) / std::abs(rate));
      }
      int leave = -1;
      double theta = kInf;
      double leave_bound = 0.0;
      double leave_pivot = 0.0;
      for (int p = 0; p < m_; ++p) {
        if (std::abs(alpha[p]) <= opt_.pivot_tolerance) continue;
        const double rate = -dir * alpha[p];
        const int j = basic_[p];
        const double bound = blocking_bound(j, rate);
        if (!std::isfinite(bound)) continue;
        const double slack = rate < 0 ? x_[j] - bound : bound - x_[j];
        const double t = std::max(0.0, slack / std::abs(rate));
        if (t > harris) continue;
        bool take = false;
        if (leave < 0) {
          take = true;
        } else if (bland) {
          take = t < theta || (t == theta && j < basic_[leave]);
        } else {
          take = std::abs(alpha[p]) > leave_pivot ||
                 (std::abs(alpha[p]) == leave_pivot && j < basic_[leave]);
        }
        if (take) {
          leave = p;
          theta = t;
          leave_bound = bound;
          leave_pivot = std::abs(alpha[p]);
        }
      }

      const double span = upper_[enter] - lower_[enter];
      const bool flip = std::isfinite(span) && (leave < 0 || span <= theta);
      if (leave < 0 && !flip) {
        if (phase1) throw NumericalError("unbounded phase-1 ray; numerically degenerate column");
        return Status::kUnbounded;
      }
      const double step = flip ? span : theta;

      x_[enter] += dir * step;
      if (step != 0.0) {
        for (int p = 0; p < m_; ++p) x_[basic_[p]] -= step * dir * alpha[p];
      }

      if (flip) {
        status_[enter] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[enter] = dir > 0 ? upper_[enter] : lower_[enter];
      } else {
        const int out = basic_[leave];
        x_[out] = leave_bound;
        status_[out] = (leave_bound == lower_[out]) ? VarStatus::kAtLower : VarStatus::kAtUpper;
        position_[out] = -1;
        pivot_update(leave, alpha);
        basic_[leave] = enter;
        position_[enter] = leave;
        status_[enter] = VarStatus::kBasic;
        ++since_refactor_;
      }

      if (step <= 1e-12) {
        if (++degenerate_run > opt_.degenerate_steps_before_bland) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  // Bound at which basic variable j stops when moving at `rate`, or +inf
  // when it never blocks. Infeasible variables block once they reach the
  // violated bound.
  double blocking_bound(int j, double rate) const {
    if (rate < 0) {
      if (above(j)) return upper_[j];
      if (below(j)) return kInf;
      return std::isfinite(lower_[j]) ? lower_[j] : kInf;
    }
    if (below(j)) return lower_[j];
    if (above(j)) return kInf;
    return std::isfinite(upper_[j]) ? upper_[j] : kInf;
  }

  void extract(Solution& sol) const {
    sol.values.resize(n_);
    for (int j = 0; j < n_; ++j) {
      double v = x_[j];
      if (v < lower_[j]) v = lower_[j];
      if (v > upper_[j]) v = upper_[j];
      sol.values[j] = v;
    }
    sol.objective = problem_.evaluate(sol.values);

    std::vector<double> cb(m_);
    for (int p = 0; p < m_; ++p) cb[p] = cost_[basic_[p]];
    const std::vector<double> ys = btran(cb);
    sol.duals.resize(m_);
    for (int i = 0; i < m_; ++i) sol.duals[i] = ys[i] * row_scale_[i] * cost_scale_;
    sol.reduced_costs.resize(n_);
    for (int j = 0; j < n_; ++j) {
      sol.reduced_costs[j] =
          status_[j] == VarStatus::kBasic ? 0.0 : reduced_cost(j, ys, false) * cost_scale_;
    }
  }

  const Problem& problem_;
  SolverOptions opt_;
  int m_;
  int n_;
  int total_;

  std::vector<double> row_scale_;
  double cost_scale_ = 1.0;
  std::vector<int> col_start_;
  std::vector<int> row_index_;
  std::vector<double> value_;

  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> x_;
  std::vector<VarStatus> status_;
  std::vector<int> basic_;
  std::vector<int> position_;
  std::vector<double> binv_;

  long iterations_ = 0;
  int since_refactor_ = 0;
};

}  // namespace

Solution solve_relaxation(const Problem& p, const SolverOptions& options,
                          const Basis* warm) {
  p.check();
  RevisedSimplex simplex(p, options);
  return simplex.run(warm);
}

Solution SimplexSolver::solve(const Problem& p) {
  if (p.has_integers()) return branch_and_bound(p, options_);
  return solve_relaxation(p, options_);
}

Solution SimplexSolver::warm_start(const Problem& p, const Basis& basis) {
  if (p.has_integers()) return branch_and_bound(p, options_, &basis);
  return solve_relaxation(p, options_, &basis);
}

std::unique_ptr<Solver> make_default_solver() {
  return std::make_unique<SimplexSolver>();
}

}  // namespace lcaes::lp
