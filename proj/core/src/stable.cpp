#include "lpsem/stable.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"
#include "lpsem/operators.hpp"

namespace lpsem {

GroundProgram gl_reduct(const GroundProgram& g, const AtomIdSet& m) {
  std::vector<GroundClause> out;
  for (const GroundClause& c : g.clauses()) {
    bool blocked = false;
    GroundClause pos;
    pos.head = c.head;
    for (const GroundLit& l : c.body) {
      if (l.negated) {
        if (contains(m, l.atom)) {
          blocked = true;
          break;
        }
      } else {
        pos.body.push_back(l);
      }
    }
    if (!blocked) out.push_back(std::move(pos));
  }
  return g.with_clauses(std::move(out));
}

AtomIdSet gl(const GroundProgram& g, const AtomIdSet& m) {
  return least_model(gl_reduct(g, m)).model;
}

std::vector<AtomIdSet> stable_models(const GroundProgram& g, std::size_t cap) {
  if (g.base().size() > cap)
    throw CapExceeded("stable model enumeration over " + std::to_string(g.base().size()) + " atoms", cap);

  // Any stable model is the least model of a reduct, so it only contains
  // head atoms; enumerate those subsets only.
  AtomIdSet heads;
  for (const GroundClause& c : g.clauses()) heads.push_back(c.head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());

  std::vector<AtomIdSet> found;
  const std::size_t n = heads.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AtomIdSet cand;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::uint64_t{1} << k)) cand.push_back(heads[k]);
    if (gl(g, cand) == cand) found.push_back(std::move(cand));
  }
  std::sort(found.begin(), found.end());
  return found;
}

AfpResult alternating_fixpoint(const GroundProgram& g) {
  AfpResult r;
  r.under_sequence.push_back({});
  r.over_sequence.push_back(g.base());
  for (;;) {
    AtomIdSet under_next = gl(g, r.over_sequence.back());
    AtomIdSet over_next = gl(g, r.under_sequence.back());
    bool done = under_next == r.under_sequence.back() && over_next == r.over_sequence.back();
    r.under_sequence.push_back(std::move(under_next));
    r.over_sequence.push_back(std::move(over_next));
    if (done) break;
  }
  r.under_fix = r.under_sequence.back();
  r.over_fix = r.over_sequence.back();

  r.wf_model = Interpretation(g.table_size());
  for (AtomId a : g.base()) r.wf_model.assign(a, Truth::False);
  for (AtomId a : r.over_fix) r.wf_model.assign(a, Truth::Undefined);
  for (AtomId a : r.under_fix) r.wf_model.assign(a, Truth::True);
  return r;
}

static nlohmann::json names_json(const AtomIdSet& ids, const GroundProgram& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (AtomId a : ids) arr.push_back(g.atom_name(a));
  return arr;
}

nlohmann::json stable_models_json(const std::vector<AtomIdSet>& models, const GroundProgram& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AtomIdSet& m : models) arr.push_back(names_json(m, g));
  return nlohmann::json{{"stable_models", arr}};
}

nlohmann::json afp_json(const AfpResult& r, const GroundProgram& g) {
  nlohmann::json j;
  nlohmann::json under = nlohmann::json::array(), over = nlohmann::json::array();
  for (const AtomIdSet& s : r.under_sequence) under.push_back(names_json(s, g));
  for (const AtomIdSet& s : r.over_sequence) over.push_back(names_json(s, g));
  j["under_sequence"] = std::move(under);
  j["over_sequence"] = std::move(over);
  j["under_fix"] = names_json(r.under_fix, g);
  j["over_fix"] = names_json(r.over_fix, g);
  j["wf_model"] = interpretation_json(r.wf_model, g);
  return j;
}

}  // namespace lpsem
