#include "lcaes/lca/double_counting.hpp"

#include <set>

#include "json.hpp"
#include "lcaes/lca/markets.hpp"

namespace lcaes::lca {

EsInputs es_inputs(const core::Scenario& s) {
  EsInputs out;
  for (const auto& t : s.technologies) {
    auto& list = out[t.id];
    for (const auto& [layer, coef] : t.conversion) {
      if (coef >= 0.0) continue;
      const int l = s.layer_index(layer);
      list.push_back({layer, l >= 0 ? s.layers[l].cpc : std::string{}});
    }
  }
  return out;
}

namespace {

class Matcher {
 public:
  Matcher(const std::vector<EsInput>& inputs, bool prefix) : prefix_(prefix) {
    for (const auto& in : inputs)
      if (!in.cpc.empty()) codes_.push_back(in.cpc);
  }

  /// Index of the matching model code, or -1.
  int match(const std::string& cpc) const {
    if (cpc.empty()) return -1;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      if (cpc == codes_[i] || (prefix_ && cpc.rfind(codes_[i], 0) == 0)) return static_cast<int>(i);
    }
    return -1;
  }

  const std::vector<std::string>& codes() const { return codes_; }

 private:
  std::vector<std::string> codes_;
  bool prefix_;
};

}  // namespace

ExtendedTechnosphere remove_double_counting(const ExtendedTechnosphere& ext, const TechnosphereDB& db,
                                            const EsInputs& inputs, const DoubleCountingOptions& options) {
  ExtendedTechnosphere out = ext;
  const int n = ext.background;
  std::vector<Triplet> trip;
  trip.reserve(ext.A.nonZeros());

  std::vector<bool> corrected(ext.size(), false);
  for (std::size_t i = 0; i < ext.targets.size(); ++i) {
    const auto& t = ext.targets[i];
    if (t.state != TargetState::kMapped || t.spec.kind != EntityKind::kTechnology ||
        t.spec.phase != Phase::kOperation) {
      continue;
    }
    const auto it = inputs.find(t.spec.entity);
    if (it == inputs.end() || it->second.empty()) continue;
    corrected[ext.column(i)] = true;

    const Matcher matcher(it->second, options.cpc_prefix);
    for (const auto& in : it->second) {
      if (in.cpc.empty()) out.warnings.push_back(t.spec.entity + ": model input " + in.layer + " has no CPC code");
    }
    std::set<int> used;
    std::map<int, double> column;
    const int col = ext.column(i);
    for (SparseMatrix::InnerIterator e(ext.A, col); e; ++e) {
      const int k = static_cast<int>(e.row());
      const double v = e.value();
      if (k >= n || v == 0.0) {
        column[k] += v;
        continue;
      }
      const auto& proc = db.processes[k];
      if (const int m = matcher.match(proc.cpc); m >= 0) {
        used.insert(m);
        out.zeroed.push_back({t.spec.entity, proc.id, proc.cpc, v, ""});
        continue;
      }
      if (!proc.market) {
        column[k] += v;
        continue;
      }
      const auto leaves = expand_markets(db, k);
      bool any = false;
      for (const auto& leaf : leaves) any = any || matcher.match(db.processes[leaf.process].cpc) >= 0;
      if (!any) {
        column[k] += v;
        continue;
      }
      for (const auto& leaf : leaves) {
        const auto& lp = db.processes[leaf.process];
        if (const int m = matcher.match(lp.cpc); m >= 0) {
          used.insert(m);
          out.zeroed.push_back({t.spec.entity, lp.id, lp.cpc, v * leaf.share, proc.id});
        } else {
          column[leaf.process] += v * leaf.share;
        }
      }
    }
    for (const auto& [k, v] : column)
      if (v != 0.0) trip.emplace_back(k, col, v);
    for (std::size_t m = 0; m < matcher.codes().size(); ++m) {
      if (!used.count(static_cast<int>(m))) {
        out.warnings.push_back(t.spec.entity + ": model input CPC " + matcher.codes()[m] +
                               " matched no background exchange");
      }
    }
  }

  for (int j = 0; j < ext.size(); ++j) {
    if (corrected[j]) continue;
    for (SparseMatrix::InnerIterator e(ext.A, j); e; ++e) trip.emplace_back(e.row(), j, e.value());
  }
  out.A.setZero();
  out.A.setFromTriplets(trip.begin(), trip.end());
  return out;
}

std::string double_counting_log_json(const ExtendedTechnosphere& ext) {
  nlohmann::ordered_json j;
  j["zeroed"] = nlohmann::ordered_json::array();
  for (const auto& z : ext.zeroed) {
    nlohmann::ordered_json e;
    e["entity"] = z.entity;
    e["process"] = z.process;
    e["cpc"] = z.cpc;
    e["amount"] = z.amount;
    e["via"] = z.via;
    j["zeroed"].push_back(e);
  }
  j["warnings"] = ext.warnings;
  return j.dump(2) + "\n";
}

}  // namespace lcaes::lca
