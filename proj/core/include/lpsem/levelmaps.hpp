#ifndef LPSEM_LEVELMAPS_HPP
#define LPSEM_LEVELMAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lpsem/interp.hpp"
#include "lpsem/levels.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// Per-clause descent conditions certifying a (model, level mapping) pair.
//   Def      unique-model condition for definite programs: every true atom
//            has a true definite clause with strictly smaller body levels
//   Stable   Fages' condition: strict descent on positive body atoms of a
//            clause whose body holds in the (total) model
//   F        Kripke-Kleene conditions (Fi)/(Fii): strict descent on some
//            supporting clause / on a defeating literal of every clause
//   Wf       (WFi)/(WFiia)/(WFiib): F with non-strict descent allowed on
//            false positive body atoms
//   Ws       (WSi)/(WSiia)/(WSiib)/(WSiic): between F and Wf
//   Sfi      stratified variant of (WFi) combined with (WFii); breaks the
//            greatest-model property
//   Locstrat local stratification of the program text itself; the
//            interpretation plays no role
enum class Condition { Def, Stable, F, Wf, Ws, Sfi, Locstrat };

std::string condition_name(Condition c);
std::optional<Condition> condition_from_name(const std::string& name);

struct Violation {
  AtomId atom = -1;
  std::string condition;  // sub-condition label, e.g. "WFiib"
  std::string clause;     // rendered witnessing clause; empty for atom-level failures
};

struct CertReport {
  bool model = false;   // modelhood of the interpretation, reported separately
  bool passed = false;  // every domain atom satisfies the condition
  bool ok = false;      // overall verdict (modelhood included where it applies)
  std::vector<Violation> violations;
};

// Checks the condition exactly as stated, atom by atom over dom(l).
// Domain rules: Def/Stable/Sfi need a total interpretation, Def/Stable/
// Locstrat a level mapping total over the base, the partial conditions
// dom(l) equal to the defined atoms. Throws DomainMismatch otherwise.
CertReport certify(const GroundProgram& g, const Interpretation& i, const LevelMapping& l,
                   Condition c);

enum class SemanticsKind { Least, Fitting, WellFounded, WeaklyPerfect, AlternatingFixpoint, StableModel };

std::string semantics_name(SemanticsKind s);
std::optional<SemanticsKind> semantics_from_name(const std::string& name);

struct CanonicalLevels {
  Interpretation model;
  LevelMapping levels;
};

// The stage-extraction level mappings: levels read off the operator iterates
// (or strata rounds / alternating sequences) that define each semantics.
// StableModel requires the candidate model and throws NotStable if it is not
// a fixed point of the GL operator.
CanonicalLevels canonical_levels(const GroundProgram& g, SemanticsKind kind,
                                 const std::optional<AtomIdSet>& stable_candidate = std::nullopt);

inline constexpr std::size_t kDefaultOracleCap = 5;

struct OracleResult {
  std::vector<Interpretation> maximal_models;
  std::optional<Interpretation> greatest;
};

// Brute-force reference: enumerates every consistent interpretation over the
// base (total ones only, for the conditions that demand totality), keeps the
// models certifiable by some level mapping, and reports the knowledge-maximal
// ones. Level mappings are searched over ranks {0..|dom|-1}; the conditions
// only compare levels, so any witness collapses to its rank image.
OracleResult greatest_certified_model(const GroundProgram& g, Condition c,
                                      std::size_t cap = kDefaultOracleCap);

// Rank-search satisfiability for one interpretation; the oracle's inner step,
// exposed for the equivalence sweeps.
bool certifiable(const GroundProgram& g, const Interpretation& i, Condition c);

nlohmann::json cert_report_json(const CertReport& r, const GroundProgram& g);

}  // namespace lpsem

#endif
