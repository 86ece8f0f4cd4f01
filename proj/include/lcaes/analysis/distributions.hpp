#pragma once

#include <string>
#include <vector>

namespace lcaes::analysis {

struct Mode {
  double location = 0.0;
  double frequency = 0.0;
};

struct Distribution {
  std::string name;
  /// bins + 1 ascending edges.
  std::vector<double> edges;
  /// Relative frequency per bin, summing to 1.
  std::vector<double> frequency;
  std::vector<Mode> modes;
};

struct DistributionOptions {
  /// Fixed bin count, 0 for Freedman-Diaconis with a floor of `min_bins`.
  int bins = 0;
  int min_bins = 10;
  int max_bins = 200;
  /// Minimum prominence, in relative frequency, for a peak to count as a mode.
  double prominence = 0.05;
};

/// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Freedman-Diaconis bin count for `values`, at least `min_bins`.
int histogram_bins(const std::vector<double>& values, const DistributionOptions& options = {});

/// Histogram and modes of one variable. A constant series gives a single bin
/// and a single mode at that value.
Distribution distribution(const std::string& name, const std::vector<double>& values,
                          const DistributionOptions& options = {});

/// Peaks of a frequency profile whose topographic prominence reaches
/// `min_prominence`; returns bin indices.
std::vector<std::size_t> prominent_peaks(const std::vector<double>& frequency, double min_prominence);

}  // namespace lcaes::analysis
