#pragma once

#include <string>

#include "json.hpp"

namespace lcaes::io {

using Json = nlohmann::ordered_json;

/// Exclusive writer lock on a run directory, released on destruction.
class RunLock {
 public:
  explicit RunLock(const std::string& run_dir);
  ~RunLock();
  RunLock(const RunLock&) = delete;
  RunLock& operator=(const RunLock&) = delete;

 private:
  std::string path_;
};

/// Directory of runs, one subdirectory per run id holding manifest.json and
/// per-stage artifact folders.
class RunStore {
 public:
  explicit RunStore(std::string root);

  /// $LCAES_OUT when set, else "runs".
  static std::string default_root();

  const std::string& root() const { return root_; }
  std::string run_dir(const std::string& id) const;
  std::string path(const std::string& id, const std::string& relative) const;
  bool exists(const std::string& id) const;

  /// Throws IoError naming the id when the run does not exist.
  Json read_manifest(const std::string& id) const;
  void write_manifest(const std::string& id, const Json& manifest) const;
  /// Creates the run directory with an initial manifest when absent.
  Json open_or_create(const std::string& id, const Json& initial) const;

  /// Writes `text` under the run, creating parent folders.
  void write(const std::string& id, const std::string& relative, const std::string& text) const;
  std::string read(const std::string& id, const std::string& relative) const;

 private:
  std::string root_;
};

/// Content hash of a scenario directory's input files.
std::string scenario_hash(const std::string& dir);
/// Content hash of a background database directory plus the mapping file.
std::string database_hash(const std::string& db_dir, const std::string& mapping_path);

/// Throws DomainError when the scenario files no longer match the hash
/// recorded in the manifest.
void require_fresh(const Json& manifest, const std::string& run_id);

}  // namespace lcaes::io
