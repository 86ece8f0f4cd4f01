#include "lcaes/lca/harmonize.hpp"

#include <map>
#include <set>

#include "lcaes/error.hpp"

namespace lcaes::lca {

std::string to_string(Phase p) { return p == Phase::kConstruction ? "construction" : "operation"; }

std::string to_string(EntityKind k) { return k == EntityKind::kTechnology ? "technology" : "resource"; }

std::optional<Phase> parse_phase(std::string_view s) {
  if (s == "construction") return Phase::kConstruction;
  if (s == "operation") return Phase::kOperation;
  return std::nullopt;
}

std::vector<TargetSpec> lca_targets(const core::Scenario& s) {
  std::vector<TargetSpec> out;
  for (const auto& t : s.technologies) {
    out.push_back({t.id, EntityKind::kTechnology, Phase::kConstruction});
    out.push_back({t.id, EntityKind::kTechnology, Phase::kOperation});
  }
  for (const auto& r : s.resources) out.push_back({r.id, EntityKind::kResource, Phase::kOperation});
  return out;
}

ExtendedTechnosphere harmonize(const TechnosphereDB& db, const std::vector<MappingEntry>& mapping,
                               const std::vector<TargetSpec>& targets) {
  ExtendedTechnosphere ext;
  const int n = db.size();
  ext.background = n;

  std::map<std::pair<std::string, Phase>, std::size_t> slot;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    slot.emplace(std::pair{targets[i].entity, targets[i].phase}, i);
    ext.targets.push_back({targets[i], TargetState::kUnmapped, -1, 0.0});
  }

  std::set<std::pair<std::string, Phase>> seen;
  for (const auto& m : mapping) {
    const auto key = std::pair{m.entity, m.phase};
    const std::string who = m.entity + " (" + to_string(m.phase) + ")";
    auto it = slot.find(key);
    if (it == slot.end()) throw DomainError("mapping names unknown entity/phase " + who);
    if (!seen.insert(key).second) throw DomainError("duplicate mapping for " + who);
    auto& t = ext.targets[it->second];
    if (m.process.empty()) {
      t.state = TargetState::kNoInventory;
      continue;
    }
    const int p = db.process_index(m.process);
    if (p < 0) throw DomainError("mapping for " + who + " names unknown process '" + m.process + "'");
    if (!(m.factor > 0.0)) throw DomainError("mapping for " + who + " has non-positive factor");
    t.state = TargetState::kMapped;
    t.process = p;
    t.factor = m.factor;
  }

  std::vector<Triplet> a, b;
  a.reserve(db.A.nonZeros() + targets.size() * 4);
  for (int j = 0; j < n; ++j)
    for (SparseMatrix::InnerIterator e(db.A, j); e; ++e) a.emplace_back(e.row(), j, e.value());
  for (int j = 0; j < n; ++j)
    for (SparseMatrix::InnerIterator e(db.B, j); e; ++e) b.emplace_back(e.row(), j, e.value());

  for (std::size_t i = 0; i < ext.targets.size(); ++i) {
    const auto& t = ext.targets[i];
    const int col = ext.column(i);
    a.emplace_back(col, col, 1.0);
    if (t.state == TargetState::kUnmapped) {
      ext.warnings.push_back(t.spec.entity + " (" + to_string(t.spec.phase) + "): no mapping, uncharacterized");
    }
    if (t.state != TargetState::kMapped) continue;
    for (SparseMatrix::InnerIterator e(db.A, t.process); e; ++e) {
      if (e.row() == t.process) continue;
      a.emplace_back(e.row(), col, e.value() * t.factor);
    }
    for (SparseMatrix::InnerIterator e(db.B, t.process); e; ++e) b.emplace_back(e.row(), col, e.value() * t.factor);
  }

  const int total = n + static_cast<int>(targets.size());
  ext.A.resize(total, total);
  ext.A.setFromTriplets(a.begin(), a.end());
  ext.B.resize(db.B.rows(), total);
  ext.B.setFromTriplets(b.begin(), b.end());
  return ext;
}

}  // namespace lcaes::lca
