#include "lpsem/operators.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"

namespace lpsem {

AtomIdSet consequences(const GroundProgram& g, const Interpretation& i) {
  AtomIdSet out;
  for (const GroundClause& c : g.clauses())
    if (body_value(i, c) == Truth::True) out.push_back(c.head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AtomIdSet refuted(const GroundProgram& g, const Interpretation& i) {
  AtomIdSet out;
  for (AtomId a : g.base()) {
    bool all_false = true;
    for (std::size_t ci : g.clauses_with_head(a)) {
      if (body_value(i, g.clauses()[ci]) != Truth::False) {
        all_false = false;
        break;
      }
    }
    if (all_false) out.push_back(a);
  }
  return out;
}

AtomIdSet greatest_unfounded_set(const GroundProgram& g, const Interpretation& i) {
  std::vector<char> in_u(g.table_size(), 0);
  for (AtomId a : g.base()) in_u[static_cast<std::size_t>(a)] = 1;

  // Descend: drop any atom owning a clause that defeats both conditions,
  // i.e. no body literal false in i and no positive body atom left in U.
  bool changed = true;
  while (changed) {
    changed = false;
    for (AtomId a : g.base()) {
      if (!in_u[static_cast<std::size_t>(a)]) continue;
      for (std::size_t ci : g.clauses_with_head(a)) {
        const GroundClause& c = g.clauses()[ci];
        bool some_false = false;
        bool pos_in_u = false;
        for (const GroundLit& l : c.body) {
          if (literal_value(i, l) == Truth::False) some_false = true;
          if (!l.negated && in_u[static_cast<std::size_t>(l.atom)]) pos_in_u = true;
        }
        if (!some_false && !pos_in_u) {
          in_u[static_cast<std::size_t>(a)] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  AtomIdSet out;
  for (AtomId a : g.base())
    if (in_u[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

static Interpretation combine(const GroundProgram& g, const AtomIdSet& t, const AtomIdSet& f,
                              const char* what) {
  Interpretation out(g.table_size());
  for (AtomId a : t) out.assign(a, Truth::True);
  for (AtomId a : f) {
    if (out.at(a) == Truth::True)
      throw InternalError(std::string(what) + " produced an inconsistent result at " + g.atom_name(a));
    out.assign(a, Truth::False);
  }
  return out;
}

Interpretation fitting_step(const GroundProgram& g, const Interpretation& i) {
  return combine(g, consequences(g, i), refuted(g, i), "fitting_step");
}

Interpretation well_founded_step(const GroundProgram& g, const Interpretation& i) {
  return combine(g, consequences(g, i), greatest_unfounded_set(g, i), "well_founded_step");
}

SemanticsTrace least_fixpoint(const GroundProgram& g, StepOperator op) {
  SemanticsTrace t;
  t.iterates.emplace_back(g.table_size());
  for (;;) {
    const Interpretation& cur = t.iterates.back();
    Interpretation next =
        op == StepOperator::Fitting ? fitting_step(g, cur) : well_founded_step(g, cur);
    bool done = next == cur;
    t.iterates.push_back(std::move(next));
    if (done) {
      t.fixpoint_index = t.iterates.size() - 2;
      return t;
    }
    if (t.iterates.size() > g.base().size() + 2)
      throw InternalError("fixpoint iteration exceeded |base|+1 steps");
  }
}

AtomIdSet definite_step(const GroundProgram& g, const AtomIdSet& m) {
  if (!g.is_definite()) throw NotDefinite("definite_step requires a definite program");
  AtomIdSet out;
  for (const GroundClause& c : g.clauses()) {
    bool fires = std::all_of(c.body.begin(), c.body.end(),
                             [&](const GroundLit& l) { return contains(m, l.atom); });
    if (fires) out.push_back(c.head);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LeastModelResult least_model(const GroundProgram& g) {
  if (!g.is_definite()) throw NotDefinite("least_model requires a definite program");
  LeastModelResult r;
  AtomIdSet cur;
  r.trace.iterates.emplace_back(g.table_size());
  for (;;) {
    AtomIdSet next = definite_step(g, cur);
    Interpretation as_interp(g.table_size());
    for (AtomId a : next) as_interp.assign(a, Truth::True);
    bool done = next == cur;
    r.trace.iterates.push_back(std::move(as_interp));
    if (done) {
      r.trace.fixpoint_index = r.trace.iterates.size() - 2;
      r.model = std::move(next);
      return r;
    }
    cur = std::move(next);
  }
}

Interpretation definite_partial_model(const GroundProgram& g) {
  return totalize(g.table_size(), least_model(g).model, g.base());
}

nlohmann::json trace_json(const SemanticsTrace& t, const GroundProgram& g, const std::string& op_name) {
  nlohmann::json j;
  j["operator"] = op_name;
  nlohmann::json its = nlohmann::json::array();
  for (const Interpretation& i : t.iterates) its.push_back(interpretation_json(i, g));
  j["iterates"] = std::move(its);
  j["fixpoint_index"] = t.fixpoint_index;
  return j;
}

}  // namespace lpsem
