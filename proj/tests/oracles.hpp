#pragma once

// Test-only reference computations. Nothing here shares code with the
// library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lcaes/lp/problem.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

// Gauss-Jordan inverse with partial pivoting; nullopt when singular.
inline std::optional<Matrix> dense_inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-14) return std::nullopt;
    std::swap(a[piv], a[k]);
    std::swap(inv[piv], inv[k]);
    const double d = a[k][k];
    for (std::size_t c = 0; c < n; ++c) {
      a[k][c] /= d;
      inv[k][c] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0.0) continue;
      const double f = a[i][k];
      for (std::size_t c = 0; c < n; ++c) {
        a[i][c] -= f * a[k][c];
        inv[i][c] -= f * inv[k][c];
      }
    }
  }
  return inv;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<double>(b.empty() ? 0 : b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline double norm1(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    double s = 0.0;
    for (const auto& row : a) s += std::abs(row[j]);
    best = std::max(best, s);
  }
  return best;
}

// Solve square system; nullopt when singular.
inline std::optional<std::vector<double>> solve_dense(Matrix a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-12) return std::nullopt;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

struct VertexOptimum {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

// Minimum over all basic feasible solutions of an LP with finite bounds,
// found by enumerating every choice of n active constraints.
inline VertexOptimum enumerate_vertices(const lcaes::lp::Problem& p) {
  using lcaes::lp::RowSense;
  const int n = p.num_variables();
  struct Plane {
    std::vector<double> a;
    double b;
  };
  std::vector<Plane> planes;
  for (const auto& r : p.rows()) {
    Plane pl{std::vector<double>(n, 0.0), r.rhs};
    for (const auto& e : r.entries) pl.a[e.col] += e.value;
    planes.push_back(pl);
  }
  for (int j = 0; j < n; ++j) {
    Plane lo{std::vector<double>(n, 0.0), p.variable(j).lower};
    lo.a[j] = 1.0;
    planes.push_back(lo);
    Plane hi{std::vector<double>(n, 0.0), p.variable(j).upper};
    hi.a[j] = 1.0;
    planes.push_back(hi);
  }
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j) {
      const auto& v = p.variable(j);
      if (x[j] < v.lower - 1e-9 || x[j] > v.upper + 1e-9) return false;
    }
    for (int i = 0; i < p.num_rows(); ++i) {
      const auto& r = p.row(i);
      const double act = p.activity(i, x);
      const double tol = 1e-9 * std::max(1.0, std::abs(r.rhs));
      if (r.sense == RowSense::kLessEqual && act > r.rhs + tol) return false;
      if (r.sense == RowSense::kGreaterEqual && act < r.rhs - tol) return false;
      if (r.sense == RowSense::kEqual && std::abs(act - r.rhs) > tol) return false;
    }
    return true;
  };

  VertexOptimum best;
  const int total = static_cast<int>(planes.size());
  std::vector<int> pick(n);
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + n, true);
  do {
    Matrix a;
    std::vector<double> b;
    for (int k = 0; k < total; ++k) {
      if (!mask[k]) continue;
      a.push_back(planes[k].a);
      b.push_back(planes[k].b);
    }
    auto x = solve_dense(a, b);
    if (!x || !feasible(*x)) continue;
    const double obj = p.evaluate(*x);
    if (!best.feasible || obj < best.objective) {
      best.feasible = true;
      best.objective = obj;
      best.x = *x;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

// Plain product-moment correlation via two passes.
inline double pearson_two_pass(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// O(n^2) non-dominated indices for minimization.
inline std::vector<std::size_t> brute_force_front(const std::vector<std::vector<double>>& pts) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      bool all_le = true, one_lt = false;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        if (pts[j][k] > pts[i][k]) all_le = false;
        if (pts[j][k] < pts[i][k]) one_lt = true;
      }
      dominated = all_le && one_lt;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Sobol points in Gray-code order from the first rows of the Joe-Kuo
// direction-number file, built bit by bit without the generator's state.
struct JoeKuoRow {
  int s;
  unsigned a;
  std::vector<std::uint32_t> m;
};

inline const std::vector<JoeKuoRow>& joe_kuo_rows() {
  static const std::vector<JoeKuoRow> rows = {
      {1, 0, {1}},          {2, 1, {1, 3}},        {3, 1, {1, 3, 1}},    {3, 2, {1, 1, 1}},
      {4, 1, {1, 1, 3, 3}}, {4, 4, {1, 3, 5, 13}}, {5, 2, {1, 1, 5, 5, 17}},
  };
  return rows;
}

inline std::vector<std::uint32_t> sobol_directions(int dim) {
  std::vector<std::uint32_t> v(33, 0);
  if (dim == 1) {
    for (int k = 1; k <= 32; ++k) v[k] = std::uint32_t{1} << (32 - k);
    return v;
  }
  const auto& row = joe_kuo_rows().at(dim - 2);
  const int s = row.s;
  for (int k = 1; k <= 32; ++k) {
    if (k <= s) {
      v[k] = row.m[k - 1] << (32 - k);
      continue;
    }
    std::uint32_t x = v[k - s] ^ (v[k - s] >> s);
    for (int j = 1; j < s; ++j) {
      if ((row.a >> (s - 1 - j)) & 1u) x ^= v[k - j];
    }
    v[k] = x;
  }
  return v;
}

inline double sobol_point(int dim, std::uint64_t n) {
  const auto v = sobol_directions(dim);
  const std::uint64_t gray = n ^ (n >> 1);
  std::uint32_t x = 0;
  for (int k = 1; k <= 32; ++k) {
    if ((gray >> (k - 1)) & 1u) x ^= v[k];
  }
  return std::ldexp(static_cast<double>(x), -32);
}

}  // namespace oracle
