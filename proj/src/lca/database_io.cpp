#include "lcaes/lca/database_io.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <tuple>

#include "json.hpp"
#include "lcaes/error.hpp"
#include "lcaes/io/csv.hpp"

namespace lcaes::lca {

namespace fs = std::filesystem;

const std::vector<std::string>& database_files() {
  static const std::vector<std::string> files = {"processes.json", "a_bb.csv", "b.csv", "c.csv"};
  return files;
}

namespace {

std::string need(const std::string& dir, const std::string& name) {
  const auto p = fs::path(dir) / name;
  if (!fs::exists(p)) throw IoError("missing database file " + p.string());
  return p.string();
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

TechnosphereDB load_database(const std::string& dir) {
  TechnosphereDB db;
  {
    const auto path = need(dir, "processes.json");
    try {
      const auto j = nlohmann::json::parse(io::read_text(path));
      for (const auto& p : j.at("processes")) {
        db.processes.push_back({p.at("id").get<std::string>(), p.value("name", std::string{}),
                                p.value("unit", std::string{}), p.value("cpc", std::string{}),
                                p.value("market", false)});
      }
      for (const auto& f : j.at("flows")) {
        db.flows.push_back(f.is_string() ? f.get<std::string>() : f.at("id").get<std::string>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path + ": " + e.what());
    }
  }
  std::map<std::string, int> flow_index;
  for (std::size_t i = 0; i < db.flows.size(); ++i) flow_index[db.flows[i]] = static_cast<int>(i);
  auto process = [&](const std::string& id, const std::string& path) {
    const int k = db.process_index(id);
    if (k < 0) throw IoError(path + ": unknown process '" + id + "'");
    return k;
  };
  auto flow = [&](const std::string& id, const std::string& path) {
    auto it = flow_index.find(id);
    if (it == flow_index.end()) throw IoError(path + ": unknown flow '" + id + "'");
    return it->second;
  };

  const int n = db.size();
  {
    const auto path = need(dir, "a_bb.csv");
    const auto t = io::read_csv(path);
    const int r = t.require("row_process", path), c = t.require("col_process", path),
              v = t.require("amount", path);
    std::vector<Triplet> trip;
    std::set<int> diagonal;
    for (const auto& row : t.rows) {
      const int i = process(row[r], path), j = process(row[c], path);
      if (i == j) diagonal.insert(i);
      trip.emplace_back(i, j, io::parse_number(row[v]));
    }
    for (int k = 0; k < n; ++k)
      if (!diagonal.count(k)) trip.emplace_back(k, k, 1.0);
    db.A.resize(n, n);
    db.A.setFromTriplets(trip.begin(), trip.end());
  }
  {
    const auto path = need(dir, "b.csv");
    const auto t = io::read_csv(path);
    const int f = t.require("flow", path), p = t.require("process", path), v = t.require("amount", path);
    std::vector<Triplet> trip;
    for (const auto& row : t.rows) trip.emplace_back(flow(row[f], path), process(row[p], path), io::parse_number(row[v]));
    db.B.resize(static_cast<Eigen::Index>(db.flows.size()), n);
    db.B.setFromTriplets(trip.begin(), trip.end());
  }
  {
    const auto path = need(dir, "c.csv");
    const auto t = io::read_csv(path);
    const int ind = t.require("indicator", path), f = t.require("flow", path), v = t.require("factor", path);
    std::vector<std::tuple<std::string, int, double>> rows;
    for (const auto& row : t.rows) {
      if (db.indicator_index(row[ind]) < 0) db.indicators.push_back(row[ind]);
      rows.emplace_back(row[ind], flow(row[f], path), io::parse_number(row[v]));
    }
    std::vector<Triplet> trip;
    for (const auto& [i, fl, v2] : rows) trip.emplace_back(db.indicator_index(i), fl, v2);
    db.C.resize(static_cast<Eigen::Index>(db.indicators.size()), static_cast<Eigen::Index>(db.flows.size()));
    db.C.setFromTriplets(trip.begin(), trip.end());
  }
  if (const auto problems = check_database(db); !problems.empty()) {
    throw DomainError("database " + dir + ": " + join(problems));
  }
  return db;
}

std::vector<MappingEntry> load_mapping(const std::string& path) {
  if (!fs::exists(path)) throw IoError("missing mapping file " + path);
  const auto t = io::read_csv(path);
  const int e = t.require("entity", path), ph = t.require("phase", path), p = t.require("process", path),
            f = t.require("factor", path);
  std::vector<MappingEntry> out;
  for (const auto& row : t.rows) {
    auto phase = parse_phase(row[ph]);
    if (!phase) throw IoError(path + ": unknown phase '" + row[ph] + "'");
    const double factor = row[f].empty() ? 1.0 : io::parse_number(row[f]);
    out.push_back({row[e], *phase, row[p], factor});
  }
  return out;
}

void save_database(const TechnosphereDB& db, const std::string& dir) {
  fs::create_directories(dir);
  nlohmann::ordered_json j;
  j["processes"] = nlohmann::ordered_json::array();
  for (const auto& p : db.processes) {
    j["processes"].push_back({{"id", p.id}, {"name", p.name}, {"unit", p.unit}, {"cpc", p.cpc}, {"market", p.market}});
  }
  j["flows"] = db.flows;
  io::write_text((fs::path(dir) / "processes.json").string(), j.dump(2) + "\n");

  std::string a = "row_process,col_process,amount\n";
  for (int c = 0; c < db.A.outerSize(); ++c)
    for (SparseMatrix::InnerIterator e(db.A, c); e; ++e)
      a += db.processes[e.row()].id + "," + db.processes[c].id + "," + io::format_number(e.value()) + "\n";
  io::write_text((fs::path(dir) / "a_bb.csv").string(), a);

  std::string b = "flow,process,amount\n";
  for (int c = 0; c < db.B.outerSize(); ++c)
    for (SparseMatrix::InnerIterator e(db.B, c); e; ++e)
      b += db.flows[e.row()] + "," + db.processes[c].id + "," + io::format_number(e.value()) + "\n";
  io::write_text((fs::path(dir) / "b.csv").string(), b);

  std::string cc = "indicator,flow,factor\n";
  std::vector<std::tuple<int, int, double>> entries;
  for (int c = 0; c < db.C.outerSize(); ++c)
    for (SparseMatrix::InnerIterator e(db.C, c); e; ++e) entries.emplace_back(e.row(), c, e.value());
  std::sort(entries.begin(), entries.end());
  for (const auto& [i, f, v] : entries) cc += db.indicators[i] + "," + db.flows[f] + "," + io::format_number(v) + "\n";
  io::write_text((fs::path(dir) / "c.csv").string(), cc);
}

void save_mapping(const std::vector<MappingEntry>& mapping, const std::string& path) {
  std::string out = "entity,phase,process,factor\n";
  for (const auto& m : mapping)
    out += m.entity + "," + to_string(m.phase) + "," + m.process + "," + io::format_number(m.factor) + "\n";
  io::write_text(path, out);
}

}  // namespace lcaes::lca
