#include "lpsem/compare.hpp"

#include <nlohmann/json.hpp>

#include "lpsem/operators.hpp"
#include "lpsem/strata.hpp"

namespace lpsem {

CompareReport compare_semantics(const GroundProgram& g) {
  CompareReport r;
  r.fitting = least_fixpoint(g, StepOperator::Fitting).fixpoint();
  r.weakly_perfect = weakly_perfect(g).model;
  r.well_founded = least_fixpoint(g, StepOperator::WellFounded).fixpoint();
  r.fitting_le_wp = knowledge_leq(r.fitting, r.weakly_perfect);
  r.wp_le_wf = knowledge_leq(r.weakly_perfect, r.well_founded);
  return r;
}

nlohmann::json compare_json(const CompareReport& r, const GroundProgram& g) {
  nlohmann::json j;
  j["fitting"] = interpretation_json(r.fitting, g);
  j["weakly_perfect"] = interpretation_json(r.weakly_perfect, g);
  j["well_founded"] = interpretation_json(r.well_founded, g);
  j["containments"] = {{"fitting_in_weakly_perfect", r.fitting_le_wp},
                       {"weakly_perfect_in_well_founded", r.wp_le_wf}};
  return j;
}

}  // namespace lpsem
