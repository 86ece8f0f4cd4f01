#pragma once

#include <string>
#include <vector>

#include "lcaes/lca/harmonize.hpp"
#include "lcaes/lca/technosphere.hpp"

namespace lcaes::lca {

/// Files that make up a database directory, in hashing order.
const std::vector<std::string>& database_files();

/// Reads processes.json, a_bb.csv (row_process,col_process,amount),
/// b.csv (flow,process,amount) and c.csv (indicator,flow,factor).
/// A missing diagonal entry is taken as 1. Throws IoError for missing or
/// malformed files and DomainError when the invariants fail.
TechnosphereDB load_database(const std::string& dir);

/// Reads mapping.csv (entity,phase,process,factor). An empty process marks
/// a phase without inventory.
std::vector<MappingEntry> load_mapping(const std::string& path);

/// Writes a database in the layout load_database reads.
void save_database(const TechnosphereDB& db, const std::string& dir);
void save_mapping(const std::vector<MappingEntry>& mapping, const std::string& path);

}  // namespace lcaes::lca
