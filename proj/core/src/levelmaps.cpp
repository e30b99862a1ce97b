#include "lpsem/levelmaps.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/stable.hpp"
#include "lpsem/strata.hpp"

namespace lpsem {

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::Def:
      return "DEF";
    case Condition::Stable:
      return "STABLE";
    case Condition::F:
      return "F";
    case Condition::Wf:
      return "WF";
    case Condition::Ws:
      return "WS";
    case Condition::Sfi:
      return "SFI";
    case Condition::Locstrat:
      return "LOCSTRAT";
  }
  return "?";
}

std::optional<Condition> condition_from_name(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "def") return Condition::Def;
  if (s == "stable") return Condition::Stable;
  if (s == "f" || s == "fitting") return Condition::F;
  if (s == "wf") return Condition::Wf;
  if (s == "ws") return Condition::Ws;
  if (s == "sfi") return Condition::Sfi;
  if (s == "locstrat") return Condition::Locstrat;
  return std::nullopt;
}

std::string semantics_name(SemanticsKind s) {
  switch (s) {
    case SemanticsKind::Least:
      return "least";
    case SemanticsKind::Fitting:
      return "fitting";
    case SemanticsKind::WellFounded:
      return "wf";
    case SemanticsKind::WeaklyPerfect:
      return "ws";
    case SemanticsKind::AlternatingFixpoint:
      return "afp";
    case SemanticsKind::StableModel:
      return "stable";
  }
  return "?";
}

std::optional<SemanticsKind> semantics_from_name(const std::string& name) {
  if (name == "least") return SemanticsKind::Least;
  if (name == "fitting") return SemanticsKind::Fitting;
  if (name == "wf") return SemanticsKind::WellFounded;
  if (name == "ws") return SemanticsKind::WeaklyPerfect;
  if (name == "afp") return SemanticsKind::AlternatingFixpoint;
  if (name == "stable") return SemanticsKind::StableModel;
  return std::nullopt;
}

namespace {

// Shared evaluator for certify (with a report sink) and the oracle's rank
// search (bool only). Levels are read through a dense pointer view; a missing
// level makes every comparison involving it fail.
struct ConditionEval {
  const GroundProgram& g;
  const Interpretation& i;
  Condition cond;
  const std::vector<const Level*>& level;  // by atom id; null = no level
  std::vector<Violation>* report = nullptr;

  const Level* head_level(AtomId a) const { return level[static_cast<std::size_t>(a)]; }

  bool lt(const Level* a, const Level* b) const { return a && b && *a < *b; }   // a < b
  bool leq(const Level* a, const Level* b) const { return a && b && *a <= *b; }  // a <= b

  // (Fi)=(WFi)=(WSi): a supporting clause, body true, strict descent on
  // every literal.
  bool strict_support(const GroundClause& c, const Level* la) const {
    if (body_value(i, c) != Truth::True) return false;
    for (const GroundLit& l : c.body)
      if (!lt(level[static_cast<std::size_t>(l.atom)], la)) return false;
    return true;
  }

  // DEF: as above, but the clause itself must be definite.
  bool def_support(const GroundClause& c, const Level* la) const {
    for (const GroundLit& l : c.body)
      if (l.negated) return false;
    return strict_support(c, la);
  }

  // STABLE: body true, strict descent on positive atoms only.
  bool stable_support(const GroundClause& c, const Level* la) const {
    if (body_value(i, c) != Truth::True) return false;
    for (const GroundLit& l : c.body)
      if (!l.negated && !lt(level[static_cast<std::size_t>(l.atom)], la)) return false;
    return true;
  }

  // SFi: body true, non-strict descent on positive atoms, strict on the
  // atoms under negation.
  bool sfi_support(const GroundClause& c, const Level* la) const {
    if (body_value(i, c) != Truth::True) return false;
    for (const GroundLit& l : c.body) {
      const Level* lb = level[static_cast<std::size_t>(l.atom)];
      if (l.negated ? !lt(lb, la) : !leq(lb, la)) return false;
    }
    return true;
  }

  // (Fii) for one clause: some literal false with strict descent.
  bool fii_holds(const GroundClause& c, const Level* la) const {
    for (const GroundLit& l : c.body)
      if (literal_value(i, l) == Truth::False && lt(level[static_cast<std::size_t>(l.atom)], la))
        return true;
    return false;
  }

  // (WFiia)/(WFiib) for one clause.
  bool wfii_holds(const GroundClause& c, const Level* la) const {
    for (const GroundLit& l : c.body) {
      const Level* lb = level[static_cast<std::size_t>(l.atom)];
      if (!l.negated && i.at(l.atom) == Truth::False && leq(lb, la)) return true;
      if (l.negated && i.at(l.atom) == Truth::True && lt(lb, la)) return true;
    }
    return false;
  }

  // (WSiia)/(WSiib)/(WSiic) for one clause.
  bool wsii_holds(const GroundClause& c, const Level* la) const {
    bool some_pos_false = false;
    bool levels_stratified = true;
    for (const GroundLit& l : c.body) {
      const Level* lb = level[static_cast<std::size_t>(l.atom)];
      if (!l.negated) {
        if (i.at(l.atom) == Truth::False) {
          some_pos_false = true;
          if (lt(lb, la)) return true;  // (WSiia)
        }
        if (!leq(lb, la)) levels_stratified = false;
      } else {
        if (i.at(l.atom) == Truth::True && lt(lb, la)) return true;  // (WSiic)
        if (!lt(lb, la)) levels_stratified = false;
      }
    }
    return levels_stratified && some_pos_false;  // (WSiib)
  }

  void record(AtomId a, std::string label, std::string clause) const {
    if (report) report->push_back({a, std::move(label), std::move(clause)});
  }

  // Label a defeated clause of a false atom by the sub-condition whose
  // truth-value trigger matched.
  std::string diagnose(const GroundClause& c) const {
    bool pos_false = false, neg_true = false;
    for (const GroundLit& l : c.body) {
      if (!l.negated && i.at(l.atom) == Truth::False) pos_false = true;
      if (l.negated && i.at(l.atom) == Truth::True) neg_true = true;
    }
    switch (cond) {
      case Condition::F:
        return "Fii";
      case Condition::Ws:
        if (pos_false) return "WSiia";
        if (neg_true) return "WSiic";
        return "WSii";
      default:
        if (pos_false) return "WFiia";
        if (neg_true) return "WFiib";
        return "WFii";
    }
  }

  bool check_atom(AtomId a) const {
    const Level* la = head_level(a);
    Truth value = i.at(a);
    const auto& clause_ids = g.clauses_with_head(a);

    if (value == Truth::True) {
      for (std::size_t ci : clause_ids) {
        const GroundClause& c = g.clauses()[ci];
        bool ok = false;
        switch (cond) {
          case Condition::Def:
            ok = def_support(c, la);
            break;
          case Condition::Stable:
            ok = stable_support(c, la);
            break;
          case Condition::Sfi:
            ok = sfi_support(c, la);
            break;
          default:
            ok = strict_support(c, la);
            break;
        }
        if (ok) return true;
      }
      std::string label;
      switch (cond) {
        case Condition::Def:
          label = "DEF";
          break;
        case Condition::Stable:
          label = "STABLE";
          break;
        case Condition::Sfi:
          label = "SFi";
          break;
        case Condition::F:
          label = "Fi";
          break;
        case Condition::Ws:
          label = "WSi";
          break;
        default:
          label = "WFi";
          break;
      }
      record(a, label, "");
      return false;
    }

    if (value == Truth::False) {
      // DEF and STABLE only constrain true atoms.
      if (cond == Condition::Def || cond == Condition::Stable) return true;
      bool all_ok = true;
      for (std::size_t ci : clause_ids) {
        const GroundClause& c = g.clauses()[ci];
        bool ok = false;
        switch (cond) {
          case Condition::F:
            ok = fii_holds(c, la);
            break;
          case Condition::Ws:
            ok = wsii_holds(c, la);
            break;
          default:  // Wf and Sfi share (WFii)
            ok = wfii_holds(c, la);
            break;
        }
        if (!ok) {
          all_ok = false;
          record(a, diagnose(c), g.render_clause(c));
          if (!report) return false;
        }
      }
      return all_ok;
    }
    return true;  // undefined atoms are outside every condition's domain
  }

  bool check(const AtomIdSet& domain) const {
    bool all_ok = true;
    for (AtomId a : domain) {
      if (!check_atom(a)) {
        all_ok = false;
        if (!report) return false;
      }
    }
    return all_ok;
  }

  // LOCSTRAT inspects the program text only.
  bool check_locally_stratified() const {
    bool all_ok = true;
    for (const GroundClause& c : g.clauses()) {
      const Level* la = head_level(c.head);
      bool ok = true;
      for (const GroundLit& l : c.body) {
        const Level* lb = level[static_cast<std::size_t>(l.atom)];
        if (l.negated ? !lt(lb, la) : !leq(lb, la)) ok = false;
      }
      if (!ok) {
        all_ok = false;
        record(c.head, "LOCSTRAT", g.render_clause(c));
        if (!report) return false;
      }
    }
    return all_ok;
  }
};

std::vector<const Level*> level_view(const GroundProgram& g, const LevelMapping& l) {
  std::vector<const Level*> view(g.table_size(), nullptr);
  for (const auto& [atom, level] : l.levels) view[static_cast<std::size_t>(atom)] = &level;
  return view;
}

bool needs_total_interpretation(Condition c) {
  return c == Condition::Def || c == Condition::Stable || c == Condition::Sfi;
}

bool needs_total_levels(Condition c) {
  return c == Condition::Def || c == Condition::Stable || c == Condition::Locstrat;
}

}  // namespace

CertReport certify(const GroundProgram& g, const Interpretation& i, const LevelMapping& l,
                   Condition c) {
  if (needs_total_interpretation(c) && !i.total_over(g.base()))
    throw DomainMismatch(condition_name(c) + " requires a total interpretation");

  if (needs_total_levels(c)) {
    for (AtomId a : g.base())
      if (!l.has(a))
        throw DomainMismatch(condition_name(c) + " requires levels on all of the base; missing " +
                             g.atom_name(a));
  } else {
    AtomIdSet defined = i.defined_atoms();
    AtomIdSet dom;
    for (const auto& [atom, level] : l.levels) dom.push_back(atom);
    if (dom != defined)
      throw DomainMismatch("level mapping domain must be exactly the defined atoms");
  }

  CertReport out;
  out.model = is_model(g, i);
  std::vector<const Level*> view = level_view(g, l);
  ConditionEval eval{g, i, c, view, &out.violations};
  if (c == Condition::Locstrat) {
    out.passed = eval.check_locally_stratified();
    out.ok = out.passed;
  } else {
    AtomIdSet domain;
    if (c == Condition::Def || c == Condition::Stable)
      domain = g.base();
    else
      domain = i.defined_atoms();
    out.passed = eval.check(domain);
    out.ok = out.model && out.passed;
  }
  return out;
}

// --------------------------------------------------------------------------
// Canonical level mappings
// --------------------------------------------------------------------------

namespace {

// min{n : atom true in iterates[n+1]} for a trace of true-only iterates.
std::uint32_t true_stage(const SemanticsTrace& t, AtomId a) {
  for (std::size_t k = 1; k < t.iterates.size(); ++k)
    if (t.iterates[k].at(a) == Truth::True) return static_cast<std::uint32_t>(k - 1);
  throw InternalError("atom never became true along the trace");
}

std::uint32_t defined_stage(const SemanticsTrace& t, AtomId a) {
  for (std::size_t k = 1; k < t.iterates.size(); ++k)
    if (t.iterates[k].at(a) != Truth::Undefined) return static_cast<std::uint32_t>(k - 1);
  throw InternalError("atom never became defined along the trace");
}

}  // namespace

CanonicalLevels canonical_levels(const GroundProgram& g, SemanticsKind kind,
                                 const std::optional<AtomIdSet>& stable_candidate) {
  CanonicalLevels out;
  switch (kind) {
    case SemanticsKind::Least: {
      LeastModelResult r = least_model(g);
      out.model = totalize(g.table_size(), r.model, g.base());
      for (AtomId a : g.base())
        out.levels.levels[a] =
            contains(r.model, a) ? Level::of(true_stage(r.trace, a)) : Level::of(0);
      break;
    }
    case SemanticsKind::Fitting:
    case SemanticsKind::WellFounded: {
      SemanticsTrace t = least_fixpoint(
          g, kind == SemanticsKind::Fitting ? StepOperator::Fitting : StepOperator::WellFounded);
      out.model = t.fixpoint();
      for (AtomId a : out.model.defined_atoms()) out.levels.levels[a] = Level::of(defined_stage(t, a));
      break;
    }
    case SemanticsKind::WeaklyPerfect: {
      WeaklyPerfectResult r = weakly_perfect(g);
      out.model = r.model;
      for (std::size_t ri = 0; ri < r.rounds.size(); ++ri) {
        const WeaklyPerfectRound& round = r.rounds[ri];
        const auto major = static_cast<std::uint32_t>(ri + 1);
        if (round.layer_model) {
          LeastModelResult lm = least_model(round.layer);
          for (AtomId a : round.layer_model->defined_atoms()) {
            out.levels.levels[a] = round.layer_model->at(a) == Truth::True
                                       ? Level{major, true_stage(lm.trace, a)}
                                       : Level{major, Level::omega};
          }
        } else {
          // Stop round: only the eliminated atoms end up defined.
          for (AtomId a : round.eliminated) out.levels.levels[a] = Level{major, Level::omega};
        }
      }
      break;
    }
    case SemanticsKind::AlternatingFixpoint: {
      AfpResult r = alternating_fixpoint(g);
      out.model = r.wf_model;
      for (AtomId a : r.under_fix) {
        std::uint32_t alpha = 0;
        for (std::size_t k = 1; k < r.under_sequence.size(); ++k)
          if (contains(r.under_sequence[k], a)) {
            alpha = static_cast<std::uint32_t>(k - 1);
            break;
          }
        LeastModelResult lm = least_model(gl_reduct(g, r.over_sequence[alpha]));
        out.levels.levels[a] = Level{alpha, true_stage(lm.trace, a)};
      }
      for (AtomId b : g.base()) {
        if (contains(r.over_fix, b)) continue;
        std::uint32_t beta = 0;
        for (std::size_t k = 1; k < r.over_sequence.size(); ++k)
          if (!contains(r.over_sequence[k], b)) {
            beta = static_cast<std::uint32_t>(k - 1);
            break;
          }
        out.levels.levels[b] = Level{beta, Level::omega};
      }
      break;
    }
    case SemanticsKind::StableModel: {
      if (!stable_candidate) throw NotStable("stable levels need a candidate model");
      const AtomIdSet& m = *stable_candidate;
      if (gl(g, m) != m) throw NotStable("candidate is not a stable model");
      out.model = totalize(g.table_size(), m, g.base());
      LeastModelResult lm = least_model(gl_reduct(g, m));
      for (AtomId a : g.base())
        out.levels.levels[a] = contains(m, a) ? Level::of(true_stage(lm.trace, a)) : Level::of(0);
      break;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Brute-force oracle
// --------------------------------------------------------------------------

bool certifiable(const GroundProgram& g, const Interpretation& i, Condition c) {
  AtomIdSet dom;
  if (needs_total_levels(c))
    dom = g.base();
  else
    dom = i.defined_atoms();
  const std::size_t n = dom.size();

  std::vector<std::uint32_t> ranks(n, 0);
  std::vector<Level> levels(n);
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) levels[k] = Level::of(ranks[k]);
    std::vector<const Level*> view(g.table_size(), nullptr);
    for (std::size_t k = 0; k < n; ++k) view[static_cast<std::size_t>(dom[k])] = &levels[k];
    ConditionEval eval{g, i, c, view, nullptr};
    bool ok = c == Condition::Locstrat ? eval.check_locally_stratified() : eval.check(dom);
    if (ok) return true;
    // next assignment in {0..n-1}^n
    std::size_t k = 0;
    while (k < n && ++ranks[k] == n) ranks[k++] = 0;
    if (k == n) return false;
    if (n == 0) return false;
  }
}

OracleResult greatest_certified_model(const GroundProgram& g, Condition c, std::size_t cap) {
  const std::size_t n = g.base().size();
  if (n > cap) throw CapExceeded("oracle over " + std::to_string(n) + " atoms", cap);

  const bool total_only = needs_total_interpretation(c);
  std::vector<Interpretation> certified;

  std::vector<int> digits(n, 0);
  const int radix = total_only ? 2 : 3;
  for (;;) {
    Interpretation i(g.table_size());
    for (std::size_t k = 0; k < n; ++k) {
      Truth t = Truth::Undefined;
      if (total_only)
        t = digits[k] ? Truth::True : Truth::False;
      else
        t = digits[k] == 0 ? Truth::Undefined : (digits[k] == 1 ? Truth::True : Truth::False);
      i.assign(g.base()[k], t);
    }
    if (is_model(g, i) && certifiable(g, i, c)) certified.push_back(std::move(i));

    std::size_t k = 0;
    while (k < n && ++digits[k] == radix) digits[k++] = 0;
    if (k == n) break;
    if (n == 0) break;
  }

  OracleResult out;
  for (const Interpretation& m : certified) {
    bool maximal = std::none_of(certified.begin(), certified.end(), [&](const Interpretation& other) {
      return !(other == m) && knowledge_leq(m, other);
    });
    if (maximal) out.maximal_models.push_back(m);
  }
  std::sort(out.maximal_models.begin(), out.maximal_models.end(),
            [](const Interpretation& a, const Interpretation& b) {
              return std::pair(a.true_atoms(), a.false_atoms()) <
                     std::pair(b.true_atoms(), b.false_atoms());
            });
  // In a finite knowledge order a unique maximal certified model dominates
  // every certified model.
  if (out.maximal_models.size() == 1) out.greatest = out.maximal_models.front();
  return out;
}

nlohmann::json cert_report_json(const CertReport& r, const GroundProgram& g) {
  nlohmann::json j;
  j["model"] = r.model;
  j["passed"] = r.passed;
  j["ok"] = r.ok;
  nlohmann::json vs = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    nlohmann::json jv;
    jv["atom"] = g.atom_name(v.atom);
    jv["condition"] = v.condition;
    jv["clause"] = v.clause;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  return j;
}

}  // namespace lpsem
