#include "lcaes/analysis/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "lcaes/analysis/special_functions.hpp"
#include "lcaes/error.hpp"

namespace lcaes::analysis {

namespace {

// Unit-norm centered copy, or empty when the series is constant.
std::vector<double> normalized(const std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  std::vector<double> d(x.size());
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d[i] = x[i] - mean;
    ss += d[i] * d[i];
  }
  if (!(ss > 0.0)) return {};
  const double norm = std::sqrt(ss);
  for (double& v : d) v /= norm;
  return d;
}

double correlation(const std::vector<double>& u, const std::vector<double>& v) {
  double dot = 0.0, minus = 0.0, plus = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    minus += (u[i] - v[i]) * (u[i] - v[i]);
    plus += (u[i] + v[i]) * (u[i] + v[i]);
  }
  const double r = dot >= 0.0 ? 1.0 - 0.5 * minus : 0.5 * plus - 1.0;
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace

double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("pearson needs two equally long series");
  const auto u = normalized(x), v = normalized(y);
  if (u.empty() || v.empty()) throw DomainError("pearson undefined for a constant series");
  return correlation(u, v);
}

double pearson_p(double r, int n) {
  if (n < 3) throw DomainError("significance needs at least three samples");
  if (std::abs(r) >= 1.0) return 0.0;
  const double df = n - 2.0;
  return student_t_two_sided(r * std::sqrt(df / (1.0 - r * r)), df);
}

CorrelationMatrix pearson(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns) {
  if (names.size() != columns.size()) throw DomainError("pearson: names and columns differ in count");
  CorrelationMatrix m;
  m.samples = columns.empty() ? 0 : static_cast<int>(columns[0].size());
  if (m.samples < 3) throw DomainError("pearson needs at least three samples");
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (static_cast<int>(columns[i].size()) != m.samples) throw DomainError("pearson: columns differ in length");
    auto u = normalized(columns[i]);
    if (u.empty()) {
      m.dropped.push_back(names[i] + ": zero variance");
      continue;
    }
    m.names.push_back(names[i]);
    kept.push_back(std::move(u));
  }
  const std::size_t k = kept.size();
  m.r.assign(k, std::vector<double>(k, 1.0));
  m.p.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double r = correlation(kept[i], kept[j]);
      m.r[i][j] = m.r[j][i] = r;
      m.p[i][j] = m.p[j][i] = pearson_p(r, m.samples);
    }
  }
  return m;
}

}  // namespace lcaes::analysis
