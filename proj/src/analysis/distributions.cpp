#include "lcaes/analysis/distributions.hpp"

#include <algorithm>
#include <cmath>

#include "lcaes/error.hpp"

namespace lcaes::analysis {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw DomainError("quantile of an empty series");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

int histogram_bins(const std::vector<double>& values, const DistributionOptions& options) {
  if (options.bins > 0) return options.bins;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  const double iqr = quantile(values, 0.75) - quantile(values, 0.25);
  if (!(range > 0.0) || !(iqr > 0.0)) return options.min_bins;
  const double width = 2.0 * iqr / std::cbrt(static_cast<double>(values.size()));
  const int fd = static_cast<int>(std::ceil(range / width));
  return std::clamp(fd, options.min_bins, options.max_bins);
}

namespace {

// Lowest frequency between a peak and the nearest higher bin in one
// direction; walking past either end of the histogram reaches zero.
double base(const std::vector<double>& f, std::size_t from, int step) {
  const double peak = f[from];
  double low = peak;
  for (auto k = static_cast<std::ptrdiff_t>(from) + step; k >= 0 && k < static_cast<std::ptrdiff_t>(f.size());
       k += step) {
    if (f[k] > peak) return low;
    low = std::min(low, f[k]);
  }
  return 0.0;
}

}  // namespace

std::vector<std::size_t> prominent_peaks(const std::vector<double>& f, double min_prominence) {
  std::vector<std::size_t> peaks;
  const std::size_t n = f.size();
  std::size_t i = 0;
  while (i < n) {
    // Treat a run of equal bins as one candidate located at its first bin.
    std::size_t j = i;
    while (j + 1 < n && f[j + 1] == f[i]) ++j;
    const bool rises = i == 0 || f[i - 1] < f[i];
    const bool falls = j + 1 == n || f[j + 1] < f[i];
    if (rises && falls && f[i] > 0.0) {
      const double left = base(f, i, -1);
      const double right = base(f, j, +1);
      if (f[i] - std::max(left, right) >= min_prominence) peaks.push_back(i);
    }
    i = j + 1;
  }
  return peaks;
}

Distribution distribution(const std::string& name, const std::vector<double>& values,
                          const DistributionOptions& options) {
  if (values.empty()) throw DomainError("distribution of " + name + ": no values");
  Distribution d;
  d.name = name;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) {
    d.edges = {lo, hi};
    d.frequency = {1.0};
    d.modes = {{lo, 1.0}};
    return d;
  }
  const int bins = histogram_bins(values, options);
  const double width = (hi - lo) / bins;
  d.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) d.edges[b] = lo + width * b;
  d.edges[bins] = hi;
  d.frequency.assign(bins, 0.0);
  const double unit = 1.0 / static_cast<double>(values.size());
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    d.frequency[b] += unit;
  }
  for (std::size_t b : prominent_peaks(d.frequency, options.prominence)) {
    d.modes.push_back({0.5 * (d.edges[b] + d.edges[b + 1]), d.frequency[b]});
  }
  return d;
}

}  // namespace lcaes::analysis
