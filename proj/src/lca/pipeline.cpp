#include "lcaes/lca/pipeline.hpp"

namespace lcaes::lca {

LciResult run_lci(const core::Scenario& s, const TechnosphereDB& db, const std::vector<MappingEntry>& mapping,
                  const LciOptions& options) {
  LciResult r;
  r.extended = harmonize(db, mapping, lca_targets(s));
  r.corrected = remove_double_counting(r.extended, db, es_inputs(s), options.double_counting);
  r.scores = options.parallel ? impact_scores(r.corrected, db.C, options.impact)
                              : impact_scores_serial(r.corrected, db.C, options.impact);
  r.coefficients = derive_coefficients(r.corrected, r.scores, db.indicators);
  return r;
}

}  // namespace lcaes::lca
