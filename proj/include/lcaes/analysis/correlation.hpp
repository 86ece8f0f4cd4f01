#pragma once

#include <string>
#include <vector>

namespace lcaes::analysis {

struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<double>> r;
  /// Two-sided significance of each r; 0 on the diagonal.
  std::vector<std::vector<double>> p;
  int samples = 0;
  /// Variables left out for zero variance, with a note each.
  std::vector<std::string> dropped;
};

/// Product-moment correlation of two equally long series. Computed from the
/// distance between the normalized centered vectors, so exact affine
/// relations give exactly +-1. Throws DomainError for fewer than two values or
/// zero variance.
double pearson_r(const std::vector<double>& x, const std::vector<double>& y);

/// Two-sided p-value of r over n samples via the t statistic with n - 2
/// degrees of freedom.
double pearson_p(double r, int n);

/// Correlation matrix over named columns of equal length (at least three
/// rows). Constant columns are dropped and listed.
CorrelationMatrix pearson(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns);

}  // namespace lcaes::analysis
