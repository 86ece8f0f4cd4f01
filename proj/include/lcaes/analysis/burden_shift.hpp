#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcaes::analysis {

/// Objective values of one run, keyed by objective name.
struct RunValues {
  std::string label;
  std::map<std::string, double> values;
};

/// Percent change of each run against a reference, per objective. Entries
/// with a zero reference value are empty (undefined).
struct BurdenShiftTable {
  std::vector<std::string> runs;
  std::vector<std::string> objectives;
  std::vector<std::vector<std::optional<double>>> percent;
};

inline constexpr const char* kUndefined = "undefined";

std::optional<double> percent_change(double value, double reference);

BurdenShiftTable burden_shift(const std::vector<RunValues>& runs, const RunValues& reference,
                              const std::vector<std::string>& objectives);

}  // namespace lcaes::analysis
