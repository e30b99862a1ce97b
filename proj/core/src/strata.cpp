#include "lpsem/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"
#include "lpsem/operators.hpp"

namespace lpsem {

namespace {

AtomIdSet occurring_atoms(const GroundProgram& g) {
  AtomIdSet out;
  for (const GroundClause& c : g.clauses()) {
    out.push_back(c.head);
    for (const GroundLit& l : c.body) out.push_back(l.atom);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int DependencyInfo::pos(AtomId a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) return -1;
  return static_cast<int>(it - atoms_.begin());
}

bool DependencyInfo::leq(AtomId b, AtomId a) const {
  int pb = pos(b), pa = pos(a);
  return pb >= 0 && pa >= 0 && leq_[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
}

bool DependencyInfo::lt(AtomId b, AtomId a) const {
  int pb = pos(b), pa = pos(a);
  return pb >= 0 && pa >= 0 && lt_[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
}

DependencyInfo dependency_info(const GroundProgram& g) {
  DependencyInfo d;
  d.atoms_ = occurring_atoms(g);
  const std::size_t n = d.atoms_.size();
  auto pos = [&](AtomId a) {
    return static_cast<std::size_t>(std::lower_bound(d.atoms_.begin(), d.atoms_.end(), a) -
                                    d.atoms_.begin());
  };

  std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> neg_edge(n, std::vector<char>(n, 0));
  for (const GroundClause& c : g.clauses()) {
    std::size_t h = pos(c.head);
    for (const GroundLit& l : c.body) {
      std::size_t b = pos(l.atom);
      if (!edge[h][b]) {
        edge[h][b] = 1;
        d.refers_to_.push_back({c.head, l.atom});
      }
      if (l.negated && !neg_edge[h][b]) {
        neg_edge[h][b] = 1;
        d.refers_neg_.push_back({c.head, l.atom});
      }
    }
  }
  std::sort(d.refers_to_.begin(), d.refers_to_.end());
  std::sort(d.refers_neg_.begin(), d.refers_neg_.end());

  // leq_[a][b]: b <= a, i.e. b reachable from a along refers_to.
  d.leq_.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.leq_[a][b] = edge[a][b];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) {
      if (!d.leq_[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (d.leq_[k][b]) d.leq_[a][b] = 1;
    }

  // lt_[a][b]: b < a via some negative edge (c,e) with c <=-or-equal a and
  // b <=-or-equal e.
  d.lt_.assign(n, std::vector<char>(n, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t e = 0; e < n; ++e) {
      if (!neg_edge[c][e]) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (!(a == c || d.leq_[a][c])) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (b == e || d.leq_[e][b]) d.lt_[a][b] = 1;
      }
    }

  // Components: classes of mutual negative dependence.
  std::vector<int> comp(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (comp[a] >= 0) continue;
    int id = static_cast<int>(d.components_.size());
    Component c;
    comp[a] = id;
    c.atoms.push_back(d.atoms_[a]);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (comp[b] < 0 && d.lt_[a][b] && d.lt_[b][a]) {
        comp[b] = id;
        c.atoms.push_back(d.atoms_[b]);
      }
    }
    c.trivial = c.atoms.size() == 1 && !d.lt_[a][a];
    d.components_.push_back(std::move(c));
  }
  return d;
}

BottomStratum bottom_stratum(const GroundProgram& g) {
  DependencyInfo d = dependency_info(g);
  const auto& comps = d.components();

  auto precedes = [&](const Component& c1, const Component& c2) {
    if (&c1 == &c2) return false;
    for (AtomId a1 : c1.atoms) {
      bool found = false;
      for (AtomId a2 : c2.atoms)
        if (d.lt(a1, a2)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };

  BottomStratum out;
  for (const Component& c : comps) {
    bool minimal = std::none_of(comps.begin(), comps.end(),
                                [&](const Component& other) { return precedes(other, c); });
    if (minimal) {
      out.minimal_components.push_back(c);
      out.atoms.insert(out.atoms.end(), c.atoms.begin(), c.atoms.end());
    }
  }
  std::sort(out.atoms.begin(), out.atoms.end());
  return out;
}

GroundProgram bottom_layer(const GroundProgram& g) {
  AtomIdSet stratum = bottom_stratum(g).atoms;
  std::vector<GroundClause> clauses;
  AtomIdSet base = stratum;
  for (const GroundClause& c : g.clauses()) {
    if (!contains(stratum, c.head)) continue;
    base.push_back(c.head);
    for (const GroundLit& l : c.body) base.push_back(l.atom);
    clauses.push_back(c);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return g.with_base(std::move(base), std::move(clauses));
}

GroundProgram weakly_perfect_reduct(const GroundProgram& g, const Interpretation& i) {
  // Steps 1 and 2: drop defeated or already-true-headed clauses, strip
  // satisfied body literals.
  std::vector<GroundClause> kept;
  for (const GroundClause& c : g.clauses()) {
    if (i.at(c.head) == Truth::True) continue;
    bool defeated = false;
    GroundClause out;
    out.head = c.head;
    for (const GroundLit& l : c.body) {
      Truth t = literal_value(i, l);
      if (t == Truth::False) {
        defeated = true;
        break;
      }
      if (t != Truth::True) out.body.push_back(l);
    }
    if (!defeated) kept.push_back(std::move(out));
  }
  // Step 3: unit subsumption.
  std::vector<char> has_unit(g.table_size(), 0);
  for (const GroundClause& c : kept)
    if (c.body.empty()) has_unit[static_cast<std::size_t>(c.head)] = 1;
  std::vector<GroundClause> out;
  for (GroundClause& c : kept)
    if (c.body.empty() || !has_unit[static_cast<std::size_t>(c.head)]) out.push_back(std::move(c));
  return g.with_clauses(std::move(out));
}

WeaklyPerfectResult weakly_perfect(const GroundProgram& g) {
  const AtomIdSet occur_g = occurring_atoms(g);
  WeaklyPerfectResult result;
  Interpretation accumulated(g.table_size());

  for (std::size_t round = 1; round <= g.base().size() + 2; ++round) {
    WeaklyPerfectRound r;
    r.accumulated = accumulated;
    r.reduct = weakly_perfect_reduct(g, accumulated);

    for (const GroundClause& c : r.reduct.clauses()) {
      if (accumulated.at(c.head) != Truth::Undefined)
        throw InternalError("reduct kept a clause with a defined head");
    }

    const AtomIdSet occur_p = occurring_atoms(r.reduct);
    AtomIdSet isolated;
    for (AtomId a : g.base()) {
      if (accumulated.at(a) != Truth::Undefined || contains(occur_p, a)) continue;
      if (contains(occur_g, a))
        r.eliminated.push_back(a);
      else
        isolated.push_back(a);
    }

    // The working stratum keeps only the trivial minimal components: their
    // layer is negation-free and self-contained, while a non-trivial minimal
    // component can never be resolved by any certified model and stays
    // undefined. Undefined base atoms with no occurrences anywhere sit in
    // singleton minimal components of their own.
    BottomStratum bs = bottom_stratum(r.reduct);
    bool has_stuck_component = false;
    for (const Component& c : bs.minimal_components) {
      if (c.trivial)
        r.stratum.insert(r.stratum.end(), c.atoms.begin(), c.atoms.end());
      else
        has_stuck_component = true;
    }
    r.stratum.insert(r.stratum.end(), isolated.begin(), isolated.end());
    std::sort(r.stratum.begin(), r.stratum.end());
    {
      std::vector<GroundClause> layer_clauses;
      for (const GroundClause& c : r.reduct.clauses())
        if (contains(r.stratum, c.head)) layer_clauses.push_back(c);
      AtomIdSet layer_base = r.stratum;
      for (const GroundClause& c : layer_clauses)
        for (const GroundLit& l : c.body) layer_base.push_back(l.atom);
      std::sort(layer_base.begin(), layer_base.end());
      layer_base.erase(std::unique(layer_base.begin(), layer_base.end()), layer_base.end());
      r.layer = r.reduct.with_base(std::move(layer_base), std::move(layer_clauses));
    }

    auto finish = [&](ModelKind kind, const std::string& reason) {
      Interpretation model = accumulated;
      for (AtomId a : r.eliminated) model.assign(a, Truth::False);
      r.stop = reason;
      result.rounds.push_back(std::move(r));
      result.model = std::move(model);
      result.kind = kind;
    };

    if (r.reduct.empty() && r.stratum.empty()) {
      finish(ModelKind::Total, "empty program");
      return result;
    }
    if (r.stratum.empty()) {
      finish(ModelKind::Partial, has_stuck_component
                                     ? "every minimal component needs negation"
                                     : "empty bottom stratum");
      return result;
    }
    if (!r.layer.is_definite()) {
      // Unreachable: trivial minimal components cannot own negative body
      // literals. Kept as the construction's own stop condition.
      finish(ModelKind::Partial, "bottom layer contains a negative literal");
      return result;
    }

    // Solve the definite layer over the stratum and fold in the falsified
    // eliminated atoms.
    AtomIdSet layer_base = r.stratum;
    for (AtomId a : r.layer.base()) layer_base.push_back(a);
    std::sort(layer_base.begin(), layer_base.end());
    layer_base.erase(std::unique(layer_base.begin(), layer_base.end()), layer_base.end());

    AtomIdSet lm = least_model(r.layer).model;
    Interpretation round_model = totalize(g.table_size(), lm, layer_base);
    for (AtomId a : r.eliminated) round_model.assign(a, Truth::False);

    for (AtomId a : round_model.defined_atoms()) {
      if (accumulated.at(a) != Truth::Undefined)
        throw InternalError("weakly perfect round redefined " + g.atom_name(a));
      accumulated.assign(a, round_model.at(a));
    }
    r.layer_model = std::move(round_model);
    result.rounds.push_back(std::move(r));
  }
  throw InternalError("weakly perfect construction failed to terminate");
}

StratificationResult locally_stratified(const GroundProgram& g) {
  const AtomIdSet atoms = occurring_atoms(g);
  const std::size_t n = atoms.size();
  auto pos = [&](AtomId a) {
    return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
  };

  // head -> body atom edges, weight 1 on negative occurrences
  std::vector<std::vector<std::pair<std::size_t, int>>> succ(n);
  for (const GroundClause& c : g.clauses()) {
    std::size_t h = pos(c.head);
    for (const GroundLit& l : c.body) succ[h].push_back({pos(l.atom), l.negated ? 1 : 0});
  }

  // Tarjan; SCCs come out with successors first.
  std::vector<int> index(n, -1), low(n, 0), scc_of(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int next_index = 0, scc_count = 0;
  std::vector<std::vector<std::size_t>> sccs;

  std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (auto [w, weight] : succ[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> scc;
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        scc_of[w] = scc_count;
        scc.push_back(w);
        if (w == v) break;
      }
      sccs.push_back(std::move(scc));
      ++scc_count;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) strongconnect(v);

  for (std::size_t v = 0; v < n; ++v)
    for (auto [w, weight] : succ[v])
      if (weight == 1 && scc_of[v] == scc_of[w]) return {false, std::nullopt};

  // Longest negative-edge distance per SCC; emission order already has
  // every successor SCC computed.
  std::vector<std::uint32_t> level(sccs.size(), 0);
  for (std::size_t s = 0; s < sccs.size(); ++s) {
    for (std::size_t v : sccs[s])
      for (auto [w, weight] : succ[v]) {
        std::size_t t = static_cast<std::size_t>(scc_of[w]);
        if (t != s) level[s] = std::max(level[s], level[t] + static_cast<std::uint32_t>(weight));
        // weight 0 inside the SCC keeps levels equal; no update needed
      }
  }

  LevelMapping witness;
  for (AtomId a : g.base()) witness.levels[a] = Level::of(0);
  for (std::size_t v = 0; v < n; ++v)
    witness.levels[atoms[v]] = Level::of(level[static_cast<std::size_t>(scc_of[v])]);
  return {true, std::move(witness)};
}

nlohmann::json weakly_perfect_json(const WeaklyPerfectResult& r, const GroundProgram& g) {
  auto names = [&](const AtomIdSet& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (AtomId a : ids) arr.push_back(g.atom_name(a));
    return arr;
  };
  nlohmann::json rounds = nlohmann::json::array();
  for (const WeaklyPerfectRound& round : r.rounds) {
    nlohmann::json jr;
    jr["N"] = interpretation_json(round.accumulated, g);
    jr["R"] = names(round.eliminated);
    jr["S"] = names(round.stratum);
    nlohmann::json layer = nlohmann::json::array();
    for (const GroundClause& c : round.layer.clauses()) layer.push_back(g.render_clause(c));
    jr["layer"] = std::move(layer);
    if (round.layer_model) jr["M"] = interpretation_json(*round.layer_model, g);
    if (round.stop) jr["stop"] = *round.stop;
    rounds.push_back(std::move(jr));
  }
  nlohmann::json j;
  j["rounds"] = std::move(rounds);
  j["kind"] = r.kind == ModelKind::Total ? "total" : "partial";
  j["model"] = interpretation_json(r.model, g);
  return j;
}

}  // namespace lpsem
