#ifndef LPSEM_COMPARE_HPP
#define LPSEM_COMPARE_HPP

#include <nlohmann/json_fwd.hpp>

#include "lpsem/interp.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// The three partial models side by side. The containments hold for every
// program; a false flag indicates an implementation bug.
struct CompareReport {
  Interpretation fitting;
  Interpretation weakly_perfect;
  Interpretation well_founded;
  bool fitting_le_wp = false;
  bool wp_le_wf = false;
};

CompareReport compare_semantics(const GroundProgram& g);

nlohmann::json compare_json(const CompareReport& r, const GroundProgram& g);

}  // namespace lpsem

#endif
