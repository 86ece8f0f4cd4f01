#include "lcaes/analysis/pareto.hpp"

#include <algorithm>
#include <numeric>

#include "lcaes/error.hpp"

namespace lcaes::analysis {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_filter(const std::vector<std::vector<double>>& points) {
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw DomainError("pareto filter: points differ in dimension");
  }
  // A dominating point precedes the dominated one lexicographically, so
  // comparing each point against the front built so far is enough.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::size_t> front;
  for (std::size_t i : order) {
    const bool dominated =
        std::any_of(front.begin(), front.end(), [&](std::size_t f) { return dominates(points[f], points[i]); });
    if (!dominated) front.push_back(i);
  }
  std::sort(front.begin(), front.end());
  return front;
}

}  // namespace lcaes::analysis
