#include "lcaes/io/run_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>

#include "lcaes/core/scenario_io.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"
#include "lcaes/io/hash.hpp"
#include "lcaes/lca/database_io.hpp"

namespace lcaes::io {

namespace fs = std::filesystem;

RunLock::RunLock(const std::string& run_dir) : path_((fs::path(run_dir) / ".lock").string()) {
  const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST) throw IoError("run directory " + run_dir + " is locked by another writer (" + path_ + ")");
    throw IoError("cannot create lock " + path_ + ": " + std::strerror(errno));
  }
  ::close(fd);
}

RunLock::~RunLock() {
  std::error_code ec;
  fs::remove(path_, ec);
}

RunStore::RunStore(std::string root) : root_(std::move(root)) {}

std::string RunStore::default_root() {
  const char* env = std::getenv("LCAES_OUT");
  return env != nullptr && *env != '\0' ? env : "runs";
}

std::string RunStore::run_dir(const std::string& id) const { return (fs::path(root_) / id).string(); }

std::string RunStore::path(const std::string& id, const std::string& relative) const {
  return (fs::path(run_dir(id)) / relative).string();
}

bool RunStore::exists(const std::string& id) const { return fs::exists(path(id, "manifest.json")); }

Json RunStore::read_manifest(const std::string& id) const {
  if (!exists(id)) throw IoError("unknown run id '" + id + "' under " + root_);
  try {
    return Json::parse(read_text(path(id, "manifest.json")));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt manifest for run " + id + ": " + e.what());
  }
}

void RunStore::write_manifest(const std::string& id, const Json& manifest) const {
  write(id, "manifest.json", manifest.dump(2) + "\n");
}

Json RunStore::open_or_create(const std::string& id, const Json& initial) const {
  if (exists(id)) return read_manifest(id);
  fs::create_directories(run_dir(id));
  write_manifest(id, initial);
  return initial;
}

void RunStore::write(const std::string& id, const std::string& relative, const std::string& text) const {
  const auto p = fs::path(path(id, relative));
  fs::create_directories(p.parent_path());
  write_text(p.string(), text);
}

std::string RunStore::read(const std::string& id, const std::string& relative) const {
  const auto p = path(id, relative);
  if (!fs::exists(p)) throw IoError("run " + id + " has no " + relative + "; run the producing stage first");
  return read_text(p);
}

std::string scenario_hash(const std::string& dir) { return hash_files(dir, core::scenario_files()); }

std::string database_hash(const std::string& db_dir, const std::string& mapping_path) {
  const auto mapping = fs::path(mapping_path);
  return sha256_hex(hash_files(db_dir, lca::database_files()) +
                    hash_files(mapping.parent_path().string(), {mapping.filename().string()}));
}

void require_fresh(const Json& manifest, const std::string& run_id) {
  const std::string dir = manifest.at("scenario_dir").get<std::string>();
  const std::string recorded = manifest.at("scenario_hash").get<std::string>();
  const std::string now = scenario_hash(dir);
  if (now != recorded) {
    throw DomainError("scenario " + dir + " changed since run " + run_id + " was created (hash " +
                      recorded.substr(0, 12) + " -> " + now.substr(0, 12) +
                      "); re-run the pipeline under a new --run id");
  }
  if (manifest.contains("lci")) {
    const auto& lci = manifest.at("lci");
    const std::string db_now = database_hash(lci.at("db_dir").get<std::string>(), lci.at("mapping").get<std::string>());
    if (db_now != lci.at("db_hash").get<std::string>()) {
      throw DomainError("background database changed since run " + run_id +
                        " computed its coefficients; re-run the pipeline under a new --run id");
    }
  }
}

}  // namespace lcaes::io
