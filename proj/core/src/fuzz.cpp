#include "lpsem/fuzz.hpp"

#include <algorithm>

#include "lpsem/compare.hpp"
#include "lpsem/errors.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/levelmaps.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/stable.hpp"
#include "lpsem/strata.hpp"

namespace lpsem {

namespace {

// Reference unfounded-set computation: union of all unfounded subsets.
AtomIdSet brute_force_unfounded(const GroundProgram& g, const Interpretation& i) {
  const AtomIdSet& base = g.base();
  const std::size_t n = base.size();
  AtomIdSet best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AtomIdSet u;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::uint64_t{1} << k)) u.push_back(base[k]);
    bool unfounded = true;
    for (AtomId a : u) {
      for (std::size_t ci : g.clauses_with_head(a)) {
        const GroundClause& c = g.clauses()[ci];
        bool cond = false;
        for (const GroundLit& l : c.body) {
          if (literal_value(i, l) == Truth::False) cond = true;
          if (!l.negated && contains(u, l.atom)) cond = true;
        }
        if (!cond) {
          unfounded = false;
          break;
        }
      }
      if (!unfounded) break;
    }
    if (unfounded) {
      AtomIdSet merged;
      std::set_union(best.begin(), best.end(), u.begin(), u.end(), std::back_inserter(merged));
      best = std::move(merged);
    }
  }
  return best;
}

std::string fail(const std::string& what) { return what; }

}  // namespace

std::optional<std::string> check_invariants(const GroundProgram& g) {
  const std::size_t n = g.base().size();

  SemanticsTrace fit = least_fixpoint(g, StepOperator::Fitting);
  SemanticsTrace wf = least_fixpoint(g, StepOperator::WellFounded);
  for (const SemanticsTrace* t : {&fit, &wf}) {
    for (std::size_t k = 0; k + 1 < t->iterates.size(); ++k)
      if (!knowledge_leq(t->iterates[k], t->iterates[k + 1]))
        return fail("fixpoint iterates are not a knowledge-increasing chain");
  }
  if (!knowledge_leq(fit.fixpoint(), wf.fixpoint()))
    return fail("Fitting model not below the well-founded model");

  if (n <= 12) {
    Interpretation empty(g.table_size());
    if (greatest_unfounded_set(g, empty) != brute_force_unfounded(g, empty))
      return fail("greatest unfounded set disagrees with subset enumeration");
    if (greatest_unfounded_set(g, fit.fixpoint()) != brute_force_unfounded(g, fit.fixpoint()))
      return fail("greatest unfounded set disagrees with subset enumeration at the Fitting model");
  }

  AfpResult afp = alternating_fixpoint(g);
  if (!(afp.wf_model == wf.fixpoint()))
    return fail("alternating fixpoint disagrees with the well-founded model");
  for (std::size_t k = 0; k + 1 < afp.under_sequence.size(); ++k) {
    if (!subset(afp.under_sequence[k], afp.under_sequence[k + 1]))
      return fail("under-sequence not increasing");
    if (!subset(afp.over_sequence[k + 1], afp.over_sequence[k]))
      return fail("over-sequence not decreasing");
    if (!subset(afp.under_sequence[k], afp.over_sequence[k]))
      return fail("under-sequence escaped the over-sequence");
  }

  WeaklyPerfectResult wp = weakly_perfect(g);
  if (!knowledge_leq(fit.fixpoint(), wp.model)) return fail("Fitting model not below weakly perfect");
  if (!knowledge_leq(wp.model, wf.fixpoint()))
    return fail("weakly perfect model not below well-founded");
  if (wp.kind == ModelKind::Total && !wp.model.total_over(g.base()))
    return fail("total weakly perfect model left an atom undefined");

  if (n <= kDefaultStableCap) {
    std::vector<AtomIdSet> stable = stable_models(g);
    for (const AtomIdSet& m : stable) {
      if (!subset(afp.under_fix, m) || !subset(m, afp.over_fix))
        return fail("stable model outside the alternating fixpoint bracket");
      CanonicalLevels cl = canonical_levels(g, SemanticsKind::StableModel, m);
      if (!certify(g, cl.model, cl.levels, Condition::Stable).ok)
        return fail("canonical stable levels failed certification");
    }
    if (fit.fixpoint().total_over(g.base())) {
      AtomIdSet t = fit.fixpoint().true_atoms();
      if (std::find(stable.begin(), stable.end(), t) == stable.end())
        return fail("total Fitting model is not stable");
    }
    if (wp.kind == ModelKind::Total) {
      AtomIdSet t = wp.model.true_atoms();
      if (std::find(stable.begin(), stable.end(), t) == stable.end())
        return fail("total weakly perfect model is not stable");
    }
    if (n <= 5) {
      // Fages equivalence both ways.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AtomIdSet m;
        for (std::size_t k = 0; k < n; ++k)
          if (mask & (std::uint64_t{1} << k)) m.push_back(g.base()[k]);
        Interpretation total = totalize(g.table_size(), m, g.base());
        bool is_stable = std::find(stable.begin(), stable.end(), m) != stable.end();
        bool certified = is_model(g, total) && certifiable(g, total, Condition::Stable);
        if (is_stable != certified) return fail("Fages equivalence failed");
      }
    }
  }

  {
    CanonicalLevels cf = canonical_levels(g, SemanticsKind::Fitting);
    if (!certify(g, cf.model, cf.levels, Condition::F).ok)
      return fail("canonical Fitting levels failed certification");
    if (!certify(g, cf.model, cf.levels, Condition::Ws).ok)
      return fail("Fitting-certified pair failed the weak-stratification condition");
    if (!certify(g, cf.model, cf.levels, Condition::Wf).ok)
      return fail("Fitting-certified pair failed the well-founded condition");

    CanonicalLevels cw = canonical_levels(g, SemanticsKind::WellFounded);
    if (!certify(g, cw.model, cw.levels, Condition::Wf).ok)
      return fail("canonical well-founded levels failed certification");

    CanonicalLevels cs = canonical_levels(g, SemanticsKind::WeaklyPerfect);
    if (!certify(g, cs.model, cs.levels, Condition::Ws).ok)
      return fail("canonical weak-stratification levels failed certification");
    if (!certify(g, cs.model, cs.levels, Condition::Wf).ok)
      return fail("weak-stratification pair failed the well-founded condition");

    CanonicalLevels ca = canonical_levels(g, SemanticsKind::AlternatingFixpoint);
    if (!certify(g, ca.model, ca.levels, Condition::Wf).ok)
      return fail("alternating-fixpoint levels failed the well-founded condition");

    if (g.is_definite()) {
      CanonicalLevels cd = canonical_levels(g, SemanticsKind::Least);
      if (!certify(g, cd.model, cd.levels, Condition::Def).ok)
        return fail("canonical least-model levels failed certification");
      if (!(wp.kind == ModelKind::Total && wp.model == definite_partial_model(g)))
        return fail("weakly perfect model of a definite program is not its least model");
    }
  }

  StratificationResult strat = locally_stratified(g);
  if (strat.stratified) {
    Interpretation empty(g.table_size());
    if (!certify(g, empty, *strat.witness, Condition::Locstrat).ok)
      return fail("stratification witness failed the certifier");
  }

  if (n <= 4) {
    OracleResult of = greatest_certified_model(g, Condition::F);
    if (!of.greatest || !(*of.greatest == fit.fixpoint()))
      return fail("oracle greatest for F differs from the Fitting model");
    OracleResult ow = greatest_certified_model(g, Condition::Wf);
    if (!ow.greatest || !(*ow.greatest == wf.fixpoint()))
      return fail("oracle greatest for WF differs from the well-founded model");
    OracleResult os = greatest_certified_model(g, Condition::Ws);
    if (!os.greatest || !(*os.greatest == wp.model))
      return fail("oracle greatest for WS differs from the weakly perfect model");
  }

  return std::nullopt;
}

FuzzReport run_fuzz(std::size_t count, std::uint64_t seed, const GeneratorParams& shape) {
  FuzzReport report;
  for (std::size_t k = 0; k < count; ++k) {
    GeneratorParams params = shape;
    params.seed = seed + k;
    Program p = random_program(params);
    GroundProgram g = ground(p);
    std::optional<std::string> failure = check_invariants(g);
    ++report.checked;
    if (failure) {
      report.failure = "seed " + std::to_string(params.seed) + ": " + *failure;
      report.counterexample = p.render();
      return report;
    }
  }
  return report;
}

}  // namespace lpsem
