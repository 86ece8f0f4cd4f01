#pragma once

#include <cstddef>
#include <vector>

namespace lcaes::analysis {

/// True when `a` is no worse than `b` in every coordinate and strictly
/// better in one (minimization).
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

/// Indices of non-dominated points in ascending order. Equal points do not
/// dominate each other and are all kept.
std::vector<std::size_t> pareto_filter(const std::vector<std::vector<double>>& points);

}  // namespace lcaes::analysis
