#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcaes/core/model.hpp"
#include "lcaes/lca/technosphere.hpp"

namespace lcaes::lca {

enum class Phase { kConstruction, kOperation };
enum class EntityKind { kTechnology, kResource };

std::string to_string(Phase p);
std::string to_string(EntityKind k);
std::optional<Phase> parse_phase(std::string_view s);

/// Links one life-cycle phase of a model entity to a background process.
/// An empty process marks a phase that deliberately has no inventory.
struct MappingEntry {
  std::string entity;
  Phase phase = Phase::kOperation;
  std::string process;
  double factor = 1.0;
};

struct TargetSpec {
  std::string entity;
  EntityKind kind = EntityKind::kTechnology;
  Phase phase = Phase::kOperation;
};

enum class TargetState { kMapped, kNoInventory, kUnmapped };

struct Target {
  TargetSpec spec;
  TargetState state = TargetState::kUnmapped;
  int process = -1;
  double factor = 0.0;
};

/// One background exchange removed from a foreground column.
struct ZeroedEntry {
  std::string entity;
  std::string process;
  std::string cpc;
  double amount = 0.0;
  /// Market the exchange was reached through, or empty for a direct input.
  std::string via;
};

/// Background block plus one foreground column per target.
struct ExtendedTechnosphere {
  int background = 0;
  std::vector<Target> targets;
  SparseMatrix A;  // (n + n') square: [A_bb A_bf; 0 I]
  SparseMatrix B;  // flows x (n + n')
  std::vector<ZeroedEntry> zeroed;
  std::vector<std::string> warnings;

  int column(std::size_t target) const { return background + static_cast<int>(target); }
  int size() const { return static_cast<int>(A.rows()); }
};

/// Construction and operation of every technology, then operation of every
/// resource, in scenario order.
std::vector<TargetSpec> lca_targets(const core::Scenario& s);

/// Builds the extended technosphere. A mapped target's column holds the
/// mapped process's inputs and elementary flows scaled by the factor; its
/// diagonal is the unit foreground product. Unmapped targets get an empty
/// column and a warning. Throws DomainError for unknown processes or
/// entities, non-positive factors and duplicate mappings.
ExtendedTechnosphere harmonize(const TechnosphereDB& db, const std::vector<MappingEntry>& mapping,
                               const std::vector<TargetSpec>& targets);

}  // namespace lcaes::lca
