#ifndef LPSEM_STABLE_HPP
#define LPSEM_STABLE_HPP

#include <nlohmann/json_fwd.hpp>

#include "lpsem/interp.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

inline constexpr std::size_t kDefaultStableCap = 20;

// Gelfond-Lifschitz reduct: keep the positive part of every clause whose
// negative body atoms all lie outside m. The result is definite; the base
// and atom table are preserved.
GroundProgram gl_reduct(const GroundProgram& g, const AtomIdSet& m);

// GL operator: least model of the reduct. Antitone in m.
AtomIdSet gl(const GroundProgram& g, const AtomIdSet& m);

// All fixed points of the GL operator. Brute force over subsets of head
// atoms; throws CapExceeded when |base| exceeds the cap.
std::vector<AtomIdSet> stable_models(const GroundProgram& g, std::size_t cap = kDefaultStableCap);

// The alternating sequences under_{n+1} = GL(over_n), over_{n+1} = GL(under_n)
// from (∅, base); their limits encode the well-founded model.
struct AfpResult {
  std::vector<AtomIdSet> under_sequence;  // increasing, starts at ∅
  std::vector<AtomIdSet> over_sequence;   // decreasing, starts at base
  AtomIdSet under_fix;
  AtomIdSet over_fix;
  Interpretation wf_model;  // under_fix ∪ ¬(base ∖ over_fix)
};

AfpResult alternating_fixpoint(const GroundProgram& g);

nlohmann::json stable_models_json(const std::vector<AtomIdSet>& models, const GroundProgram& g);
nlohmann::json afp_json(const AfpResult& r, const GroundProgram& g);

}  // namespace lpsem

#endif
