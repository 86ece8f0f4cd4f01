#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lcaes::io {

/// Comma-separated table with a header row. Fields containing commas or
/// quotes are double-quoted, with embedded quotes doubled.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name, or -1.
  int column(std::string_view name) const;
  /// Column index by name; throws IoError naming the file when absent.
  int require(std::string_view name, std::string_view context) const;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(std::string_view text, std::string_view context = "<memory>");
std::string to_csv(const CsvTable& table);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

/// 17 significant digits, "inf"/"-inf" for infinities, "nan" for NaN.
std::string format_number(double v);
/// Inverse of format_number. Throws IoError on malformed text.
double parse_number(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);

}  // namespace lcaes::io
