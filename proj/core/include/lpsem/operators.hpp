#ifndef LPSEM_OPERATORS_HPP
#define LPSEM_OPERATORS_HPP

#include <nlohmann/json_fwd.hpp>

#include "lpsem/interp.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// Iterates of a monotone step function starting at the empty interpretation.
// The trace keeps the first repeated iterate, so
// iterates[fixpoint_index] == iterates[fixpoint_index + 1].
struct SemanticsTrace {
  std::vector<Interpretation> iterates;
  std::size_t fixpoint_index = 0;

  const Interpretation& fixpoint() const { return iterates[fixpoint_index]; }
};

enum class StepOperator { Fitting, WellFounded };

// Atoms with a clause whose body is true in i.
AtomIdSet consequences(const GroundProgram& g, const Interpretation& i);

// Base atoms all of whose clauses have a false body in i (vacuously the
// atoms with no clause at all).
AtomIdSet refuted(const GroundProgram& g, const Interpretation& i);

// The greatest set U of base atoms such that every clause of a member
// either has a body literal false in i or a positive body atom inside U.
// Computed by descent from the full base.
AtomIdSet greatest_unfounded_set(const GroundProgram& g, const Interpretation& i);

// consequences ∪ ¬refuted. Disjointness holds for consistent i.
Interpretation fitting_step(const GroundProgram& g, const Interpretation& i);

// consequences ∪ ¬greatest_unfounded_set. Throws InternalError if the two
// overlap; cannot happen along iterations from the empty interpretation.
Interpretation well_founded_step(const GroundProgram& g, const Interpretation& i);

// Least fixed point by iteration from empty; the Fitting model or the
// well-founded model depending on the operator.
SemanticsTrace least_fixpoint(const GroundProgram& g, StepOperator op);

// Two-valued immediate consequences of a definite program.
AtomIdSet definite_step(const GroundProgram& g, const AtomIdSet& m);

struct LeastModelResult {
  AtomIdSet model;
  SemanticsTrace trace;  // iterates as true-only interpretations
};

// Least two-valued model of a definite program (throws NotDefinite).
LeastModelResult least_model(const GroundProgram& g);

// The least model identified with a total interpretation over the base.
Interpretation definite_partial_model(const GroundProgram& g);

nlohmann::json trace_json(const SemanticsTrace& t, const GroundProgram& g, const std::string& op_name);

}  // namespace lpsem

#endif
