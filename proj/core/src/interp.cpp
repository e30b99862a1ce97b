#include "lpsem/interp.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"

namespace lpsem {

Truth flip(Truth t) {
  switch (t) {
    case Truth::True:
      return Truth::False;
    case Truth::False:
      return Truth::True;
    default:
      return Truth::Undefined;
  }
}

Interpretation Interpretation::from_sets(std::size_t table_size, std::span<const AtomId> true_atoms,
                                         std::span<const AtomId> false_atoms) {
  Interpretation i(table_size);
  for (AtomId a : true_atoms) i.assign(a, Truth::True);
  for (AtomId a : false_atoms) {
    if (i.at(a) == Truth::True)
      throw InvalidInterpretation("atom id " + std::to_string(a) + " is both true and false");
    i.assign(a, Truth::False);
  }
  return i;
}

std::vector<AtomId> Interpretation::true_atoms() const {
  std::vector<AtomId> out;
  for (std::size_t a = 0; a < v_.size(); ++a)
    if (v_[a] == Truth::True) out.push_back(static_cast<AtomId>(a));
  return out;
}

std::vector<AtomId> Interpretation::false_atoms() const {
  std::vector<AtomId> out;
  for (std::size_t a = 0; a < v_.size(); ++a)
    if (v_[a] == Truth::False) out.push_back(static_cast<AtomId>(a));
  return out;
}

std::vector<AtomId> Interpretation::defined_atoms() const {
  std::vector<AtomId> out;
  for (std::size_t a = 0; a < v_.size(); ++a)
    if (v_[a] != Truth::Undefined) out.push_back(static_cast<AtomId>(a));
  return out;
}

std::size_t Interpretation::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(v_.begin(), v_.end(), [](Truth t) { return t != Truth::Undefined; }));
}

bool Interpretation::total_over(std::span<const AtomId> base) const {
  return std::all_of(base.begin(), base.end(), [&](AtomId a) { return at(a) != Truth::Undefined; });
}

bool contains(const AtomIdSet& s, AtomId a) { return std::binary_search(s.begin(), s.end(), a); }

bool subset(const AtomIdSet& a, const AtomIdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Interpretation totalize(std::size_t table_size, const AtomIdSet& true_atoms,
                        std::span<const AtomId> base) {
  Interpretation i(table_size);
  for (AtomId a : base) i.assign(a, Truth::False);
  for (AtomId a : true_atoms) i.assign(a, Truth::True);
  return i;
}

Truth literal_value(const Interpretation& i, const GroundLit& l) {
  Truth t = i.at(l.atom);
  return l.negated ? flip(t) : t;
}

Truth body_value(const Interpretation& i, const GroundClause& c) {
  bool undef = false;
  for (const GroundLit& l : c.body) {
    switch (literal_value(i, l)) {
      case Truth::False:
        return Truth::False;
      case Truth::Undefined:
        undef = true;
        break;
      case Truth::True:
        break;
    }
  }
  return undef ? Truth::Undefined : Truth::True;
}

bool is_model(const GroundProgram& g, const Interpretation& i) {
  for (const GroundClause& c : g.clauses()) {
    Truth body = body_value(i, c);
    Truth head = i.at(c.head);
    if (body == Truth::True && head != Truth::True) return false;
    if (body == Truth::Undefined && head == Truth::False) return false;
  }
  return true;
}

bool is_two_valued_model(const GroundProgram& g, const AtomIdSet& m) {
  for (const GroundClause& c : g.clauses()) {
    bool body_true = true;
    for (const GroundLit& l : c.body) {
      bool atom_in = contains(m, l.atom);
      if (l.negated ? atom_in : !atom_in) {
        body_true = false;
        break;
      }
    }
    if (body_true && !contains(m, c.head)) return false;
  }
  return true;
}

bool knowledge_leq(const Interpretation& i, const Interpretation& j) {
  if (i.size() != j.size()) throw InternalError("knowledge_leq over different tables");
  for (std::size_t a = 0; a < i.size(); ++a) {
    Truth t = i.at(static_cast<AtomId>(a));
    if (t != Truth::Undefined && j.at(static_cast<AtomId>(a)) != t) return false;
  }
  return true;
}

static std::vector<std::string> names(const std::vector<AtomId>& ids, const GroundProgram& g) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (AtomId a : ids) out.push_back(g.atom_name(a));
  return out;
}

std::string interpretation_text(const Interpretation& i, const GroundProgram& g) {
  auto join = [](const std::vector<std::string>& xs) {
    std::string out = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k) out += ", ";
      out += xs[k];
    }
    return out + "}";
  };
  std::vector<AtomId> undef;
  for (AtomId a : g.base())
    if (i.at(a) == Truth::Undefined) undef.push_back(a);
  return "true: " + join(names(i.true_atoms(), g)) + "\nfalse: " + join(names(i.false_atoms(), g)) +
         "\nundefined: " + join(names(undef, g));
}

nlohmann::json interpretation_json(const Interpretation& i, const GroundProgram& g) {
  nlohmann::json j;
  j["true"] = names(i.true_atoms(), g);
  j["false"] = names(i.false_atoms(), g);
  std::vector<AtomId> undef;
  for (AtomId a : g.base())
    if (i.at(a) == Truth::Undefined) undef.push_back(a);
  j["undefined"] = names(undef, g);
  return j;
}

Interpretation interpretation_from_json(const nlohmann::json& j, const GroundProgram& g) {
  auto read = [&](const char* key) {
    std::vector<AtomId> ids;
    if (!j.contains(key)) return ids;
    for (const auto& name : j.at(key)) {
      auto id = g.atom_id(name.get<std::string>());
      if (!id) throw InvalidInterpretation("unknown atom in model file: " + name.get<std::string>());
      ids.push_back(*id);
    }
    return ids;
  };
  std::vector<AtomId> t = read("true"), f = read("false");
  return Interpretation::from_sets(g.table_size(), t, f);
}

}  // namespace lpsem
