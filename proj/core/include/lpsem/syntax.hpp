#ifndef LPSEM_SYNTAX_HPP
#define LPSEM_SYNTAX_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lpsem {

// ---------------------------------------------------------------------------
// Terms, atoms, literals, clauses: the abstract syntax of normal programs.
// A term is a variable (uppercase-initial), a constant, or a compound
// functor application. Constants are represented as arity-0 compounds.
// ---------------------------------------------------------------------------

struct Term {
  enum class Kind { Variable, Function };

  Kind kind = Kind::Function;
  std::string name;
  std::vector<Term> args;  // empty for variables and constants

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Function && args.empty(); }
  bool is_ground() const;
  // Nesting depth: constants have depth 0, f(t1,...,tn) has 1 + max depth.
  int depth() const;

  std::string render() const;
  bool operator==(const Term&) const;
  bool operator<(const Term&) const;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  int depth() const;  // max arg depth; 0 for propositional atoms
  std::string render() const;
  bool operator==(const Atom&) const;
  bool operator<(const Atom&) const;
};

struct Literal {
  bool negated = false;
  Atom atom;

  std::string render() const;
  bool operator==(const Literal&) const = default;
};

struct Clause {
  Atom head;
  std::vector<Literal> body;  // source order, duplicates preserved

  bool is_definite() const;
  bool is_unit() const { return body.empty(); }
  std::string render() const;
  bool operator==(const Clause&) const = default;
};

// A possibly non-ground program plus optional extra vocabulary. The
// declared atoms let callers pin down a Herbrand base larger than the
// atoms occurring in clauses.
struct Program {
  std::vector<Clause> clauses;
  std::set<Atom> declared_atoms;

  std::string render() const;
  bool operator==(const Program&) const = default;
};

// ---------------------------------------------------------------------------
// Parser. Grammar:
//   program   := (clause | directive)*
//   clause    := atom (":-" literal ("," literal)*)? "."
//   literal   := ("not" ws)? atom
//   atom      := lowerident ("(" term ("," term)* ")")?
//   term      := upperident | lowerident ("(" term ("," term)* ")")?
//   directive := "#atom" atom "."
// "%" starts a comment running to end of line.
// ---------------------------------------------------------------------------

Program parse_program(const std::string& text);
Program parse_program(std::istream& in);

// ---------------------------------------------------------------------------
// Ground programs. Atom identifiers index into a table sorted by rendered
// atom text; programs derived from a grounding (reducts, layers) share the
// table so ids stay stable across them.
// ---------------------------------------------------------------------------

using AtomId = std::int32_t;

struct GroundLit {
  AtomId atom = -1;
  bool negated = false;
  auto operator<=>(const GroundLit&) const = default;
};

struct GroundClause {
  AtomId head = -1;
  std::vector<GroundLit> body;
  auto operator<=>(const GroundClause&) const = default;
};

class GroundProgram {
 public:
  GroundProgram() = default;
  // base must cover every atom occurring in clauses; throws InternalError
  // otherwise. The table is the id space; base may be a subset of it.
  GroundProgram(std::shared_ptr<const std::vector<Atom>> table, std::vector<AtomId> base,
                std::vector<GroundClause> clauses);

  std::size_t table_size() const { return table_ ? table_->size() : 0; }
  const Atom& atom(AtomId id) const { return (*table_)[static_cast<std::size_t>(id)]; }
  std::string atom_name(AtomId id) const { return atom(id).render(); }
  std::optional<AtomId> atom_id(const Atom& a) const;
  std::optional<AtomId> atom_id(const std::string& rendered) const;

  const std::vector<AtomId>& base() const { return base_; }
  bool in_base(AtomId id) const { return in_base_[static_cast<std::size_t>(id)]; }
  const std::vector<GroundClause>& clauses() const { return clauses_; }
  const std::vector<std::size_t>& clauses_with_head(AtomId id) const;

  bool is_definite() const;
  bool empty() const { return clauses_.empty(); }

  // Same table, same base, different clause set.
  GroundProgram with_clauses(std::vector<GroundClause> clauses) const;
  // Same table, restricted base.
  GroundProgram with_base(std::vector<AtomId> base, std::vector<GroundClause> clauses) const;

  std::string render_clause(const GroundClause& c) const;
  std::string render() const;
  std::vector<std::string> base_names() const;

  std::shared_ptr<const std::vector<Atom>> table() const { return table_; }

 private:
  std::shared_ptr<const std::vector<Atom>> table_;
  std::vector<AtomId> base_;            // sorted ids
  std::vector<char> in_base_;           // indexed by id
  std::vector<GroundClause> clauses_;
  std::vector<std::vector<std::size_t>> by_head_;  // clause indices per head id
};

// Ground instantiation. Substitutes ground terms of nesting depth <=
// depth_bound for variables; the base is every atom of depth <= depth_bound
// constructible over the program's predicates, plus declared atoms, plus
// atoms of emitted clauses. Instances whose head exceeds the bound, or that
// mention a body atom outside the base, are dropped. A program with compound
// terms requires a bound (GroundingOverflow otherwise); a Datalog or
// propositional program does not. Introduces the constant "c0" when terms
// are needed but the program has none.
GroundProgram ground(const Program& p, std::optional<int> depth_bound = std::nullopt);

// The Herbrand base, sorted for display.
std::vector<Atom> herbrand_base(const GroundProgram& g);

// Inverse view: every ground clause as a clause, base as declared atoms.
// ground(to_program(g)) reproduces g for propositional g.
Program to_program(const GroundProgram& g);

nlohmann::json program_json(const GroundProgram& g);

}  // namespace lpsem

#endif
