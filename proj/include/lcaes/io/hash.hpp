#pragma once

#include <string>
#include <vector>

namespace lcaes::io {

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Content hash over (relative name, bytes) of the given files, in the order
/// given. Missing files contribute their name and a "missing" marker.
std::string hash_files(const std::string& dir, const std::vector<std::string>& names);

}  // namespace lcaes::io
