#include "lpsem/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"

namespace lpsem {

// --------------------------------------------------------------------------
// AST
// --------------------------------------------------------------------------

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Variable;
  t.name = std::move(name);
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind = Kind::Function;
  t.name = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind = Kind::Function;
  t.name = std::move(functor);
  t.args = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

int Term::depth() const {
  int d = 0;
  for (const Term& a : args) d = std::max(d, a.depth() + 1);
  return d;
}

static void render_args(std::string& out, const std::vector<Term>& args) {
  if (args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].render();
  }
  out += ')';
}

std::string Term::render() const {
  std::string out = name;
  render_args(out, args);
  return out;
}

bool Term::operator==(const Term& o) const {
  return kind == o.kind && name == o.name && args == o.args;
}

bool Term::operator<(const Term& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (name != o.name) return name < o.name;
  return std::lexicographical_compare(args.begin(), args.end(), o.args.begin(), o.args.end());
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

int Atom::depth() const {
  int d = 0;
  for (const Term& a : args) d = std::max(d, a.depth());
  return d;
}

std::string Atom::render() const {
  std::string out = predicate;
  render_args(out, args);
  return out;
}

bool Atom::operator==(const Atom& o) const { return predicate == o.predicate && args == o.args; }

bool Atom::operator<(const Atom& o) const {
  if (predicate != o.predicate) return predicate < o.predicate;
  return std::lexicographical_compare(args.begin(), args.end(), o.args.begin(), o.args.end());
}

std::string Literal::render() const {
  return negated ? "not " + atom.render() : atom.render();
}

bool Clause::is_definite() const {
  return std::none_of(body.begin(), body.end(), [](const Literal& l) { return l.negated; });
}

std::string Clause::render() const {
  std::string out = head.render();
  if (!body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].render();
    }
  }
  out += '.';
  return out;
}

std::string Program::render() const {
  std::string out;
  for (const Atom& a : declared_atoms) {
    out += "#atom " + a.render() + ".\n";
  }
  for (const Clause& c : clauses) {
    out += c.render() + "\n";
  }
  return out;
}

// --------------------------------------------------------------------------
// Parser
// --------------------------------------------------------------------------

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  struct Token {
    enum class Kind { Ident, Var, Punct, Directive, End };
    Kind kind;
    std::string value;
    int line;
    int column;
  };

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (eof()) return {Token::Kind::End, "", line, col};
    char c = peek();
    if (c == '#') {
      std::string word(1, advance());
      while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) word += advance();
      return {Token::Kind::Directive, word, line, col};
    }
    if (c == '(' || c == ')' || c == ',' || c == '.') {
      advance();
      return {Token::Kind::Punct, std::string(1, c), line, col};
    }
    if (c == ':') {
      advance();
      if (!eof() && peek() == '-') {
        advance();
        return {Token::Kind::Punct, ":-", line, col};
      }
      throw ParseError("expected ':-'", line, col);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string word;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) word += advance();
      bool var = std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_';
      return {var ? Token::Kind::Var : Token::Kind::Ident, word, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  Program run() {
    Program p;
    while (cur_.kind != Lexer::Token::Kind::End) {
      if (cur_.kind == Lexer::Token::Kind::Directive) {
        if (cur_.value != "#atom") throw ParseError("unknown directive '" + cur_.value + "'", cur_.line, cur_.column);
        shift();
        Atom a = parse_atom();
        if (!a.is_ground())
          throw ParseError("declared atom must be ground: " + a.render(), cur_.line, cur_.column);
        expect_punct(".");
        p.declared_atoms.insert(std::move(a));
      } else {
        p.clauses.push_back(parse_clause());
      }
    }
    return p;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  void expect_punct(const std::string& s) {
    if (cur_.kind != Lexer::Token::Kind::Punct || cur_.value != s)
      throw ParseError("expected '" + s + "'", cur_.line, cur_.column);
    shift();
  }

  Clause parse_clause() {
    Clause c;
    c.head = parse_atom();
    if (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == ":-") {
      shift();
      c.body.push_back(parse_literal());
      while (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == ",") {
        shift();
        c.body.push_back(parse_literal());
      }
    }
    expect_punct(".");
    return c;
  }

  Literal parse_literal() {
    Literal l;
    if (cur_.kind == Lexer::Token::Kind::Ident && cur_.value == "not") {
      int line = cur_.line, col = cur_.column;
      shift();
      if (cur_.kind != Lexer::Token::Kind::Ident)
        throw ParseError("expected atom after 'not'", line, col);
      l.negated = true;
    }
    l.atom = parse_atom();
    return l;
  }

  Atom parse_atom() {
    if (cur_.kind != Lexer::Token::Kind::Ident)
      throw ParseError("expected atom", cur_.line, cur_.column);
    Atom a;
    a.predicate = cur_.value;
    shift();
    if (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == "(") {
      shift();
      a.args.push_back(parse_term());
      while (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == ",") {
        shift();
        a.args.push_back(parse_term());
      }
      expect_punct(")");
    }
    return a;
  }

  Term parse_term() {
    if (cur_.kind == Lexer::Token::Kind::Var) {
      Term t = Term::variable(cur_.value);
      shift();
      return t;
    }
    if (cur_.kind != Lexer::Token::Kind::Ident)
      throw ParseError("expected term", cur_.line, cur_.column);
    std::string name = cur_.value;
    shift();
    if (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == "(") {
      shift();
      std::vector<Term> args;
      args.push_back(parse_term());
      while (cur_.kind == Lexer::Token::Kind::Punct && cur_.value == ",") {
        shift();
        args.push_back(parse_term());
      }
      expect_punct(")");
      return Term::compound(std::move(name), std::move(args));
    }
    return Term::constant(std::move(name));
  }

  Lexer lex_;
  Lexer::Token cur_;
};

}  // namespace

Program parse_program(const std::string& text) { return Parser(text).run(); }

Program parse_program(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str());
}

// --------------------------------------------------------------------------
// Ground programs
// --------------------------------------------------------------------------

GroundProgram::GroundProgram(std::shared_ptr<const std::vector<Atom>> table, std::vector<AtomId> base,
                             std::vector<GroundClause> clauses)
    : table_(std::move(table)), base_(std::move(base)), clauses_(std::move(clauses)) {
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  in_base_.assign(table_size(), 0);
  for (AtomId id : base_) {
    if (id < 0 || static_cast<std::size_t>(id) >= table_size())
      throw InternalError("base atom id out of range");
    in_base_[static_cast<std::size_t>(id)] = 1;
  }
  by_head_.assign(table_size(), {});
  for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
    const GroundClause& c = clauses_[ci];
    if (!in_base(c.head)) throw InternalError("clause head outside base: " + atom_name(c.head));
    for (const GroundLit& l : c.body)
      if (!in_base(l.atom)) throw InternalError("body atom outside base: " + atom_name(l.atom));
    by_head_[static_cast<std::size_t>(c.head)].push_back(ci);
  }
}

std::optional<AtomId> GroundProgram::atom_id(const Atom& a) const {
  auto it = std::lower_bound(table_->begin(), table_->end(), a,
                             [](const Atom& x, const Atom& y) { return x.render() < y.render(); });
  if (it != table_->end() && *it == a) return static_cast<AtomId>(it - table_->begin());
  return std::nullopt;
}

std::optional<AtomId> GroundProgram::atom_id(const std::string& rendered) const {
  auto it = std::lower_bound(table_->begin(), table_->end(), rendered,
                             [](const Atom& x, const std::string& s) { return x.render() < s; });
  if (it != table_->end() && it->render() == rendered) return static_cast<AtomId>(it - table_->begin());
  return std::nullopt;
}

const std::vector<std::size_t>& GroundProgram::clauses_with_head(AtomId id) const {
  return by_head_[static_cast<std::size_t>(id)];
}

bool GroundProgram::is_definite() const {
  for (const GroundClause& c : clauses_)
    for (const GroundLit& l : c.body)
      if (l.negated) return false;
  return true;
}

GroundProgram GroundProgram::with_clauses(std::vector<GroundClause> clauses) const {
  return GroundProgram(table_, base_, std::move(clauses));
}

GroundProgram GroundProgram::with_base(std::vector<AtomId> base, std::vector<GroundClause> clauses) const {
  return GroundProgram(table_, std::move(base), std::move(clauses));
}

std::string GroundProgram::render_clause(const GroundClause& c) const {
  std::string out = atom_name(c.head);
  if (!c.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (i) out += ", ";
      if (c.body[i].negated) out += "not ";
      out += atom_name(c.body[i].atom);
    }
  }
  out += '.';
  return out;
}

std::string GroundProgram::render() const {
  std::string out;
  for (const GroundClause& c : clauses_) out += render_clause(c) + "\n";
  return out;
}

std::vector<std::string> GroundProgram::base_names() const {
  std::vector<std::string> out;
  out.reserve(base_.size());
  for (AtomId id : base_) out.push_back(atom_name(id));
  return out;
}

std::vector<Atom> herbrand_base(const GroundProgram& g) {
  std::vector<Atom> out;
  out.reserve(g.base().size());
  for (AtomId id : g.base()) out.push_back(g.atom(id));
  return out;
}

// --------------------------------------------------------------------------
// Grounder
// --------------------------------------------------------------------------

namespace {

struct Signature {
  std::set<Term> constants;
  std::set<std::pair<std::string, std::size_t>> functors;    // name, arity >= 1
  std::set<std::pair<std::string, std::size_t>> predicates;  // name, arity
  bool has_variables = false;

  void add_term(const Term& t) {
    if (t.is_variable()) {
      has_variables = true;
      return;
    }
    if (t.args.empty()) {
      constants.insert(t);
    } else {
      functors.insert({t.name, t.args.size()});
      for (const Term& a : t.args) add_term(a);
    }
  }
  void add_atom(const Atom& a) {
    predicates.insert({a.predicate, a.args.size()});
    for (const Term& t : a.args) add_term(t);
  }
};

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
  if (t.is_variable()) return sub.at(t.name);
  if (t.args.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const Term& a : t.args) args.push_back(substitute(a, sub));
  return Term::compound(t.name, std::move(args));
}

Atom substitute(const Atom& a, const std::map<std::string, Term>& sub) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(substitute(t, sub));
  return out;
}

void collect_vars(const Term& t, std::set<std::string>& vars) {
  if (t.is_variable()) {
    vars.insert(t.name);
    return;
  }
  for (const Term& a : t.args) collect_vars(a, vars);
}

// All tuples over `universe` of the given width, in universe order.
void for_each_tuple(std::size_t width, const std::vector<Term>& universe,
                    const std::function<void(const std::vector<const Term*>&)>& fn) {
  std::vector<const Term*> tuple(width, nullptr);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == width) {
      fn(tuple);
      return;
    }
    for (const Term& t : universe) {
      tuple[i] = &t;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

GroundProgram ground(const Program& p, std::optional<int> depth_bound) {
  Signature sig;
  for (const Clause& c : p.clauses) {
    sig.add_atom(c.head);
    for (const Literal& l : c.body) sig.add_atom(l.atom);
  }
  for (const Atom& a : p.declared_atoms) sig.add_atom(a);

  const bool has_compounds = !sig.functors.empty();
  if (has_compounds && !depth_bound)
    throw GroundingOverflow("program has compound terms; a depth bound is required");

  // Herbrand universe up to the depth bound. The default constant keeps it
  // non-empty when terms are needed at all.
  std::vector<Term> universe(sig.constants.begin(), sig.constants.end());
  bool needs_terms = sig.has_variables || has_compounds ||
                     std::any_of(sig.predicates.begin(), sig.predicates.end(),
                                 [](const auto& pr) { return pr.second > 0; });
  if (universe.empty() && needs_terms) universe.push_back(Term::constant("c0"));
  if (has_compounds) {
    std::vector<Term> frontier = universe;  // depth <= current level
    for (int d = 1; d <= *depth_bound; ++d) {
      std::vector<Term> next;
      for (const auto& [fname, arity] : sig.functors) {
        for_each_tuple(arity, frontier, [&](const std::vector<const Term*>& tuple) {
          std::vector<Term> args;
          args.reserve(arity);
          for (const Term* t : tuple) args.push_back(*t);
          Term t = Term::compound(fname, std::move(args));
          if (t.depth() == d) next.push_back(std::move(t));
        });
      }
      universe.insert(universe.end(), next.begin(), next.end());
      frontier = universe;
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  }

  const int bound = depth_bound.value_or(0);
  auto atom_fits = [&](const Atom& a) { return !has_compounds || a.depth() <= bound; };

  // Instantiate clauses; head instances over the bound are dropped.
  std::vector<Clause> instances;
  for (const Clause& c : p.clauses) {
    std::set<std::string> vars;
    for (const Term& t : c.head.args) collect_vars(t, vars);
    for (const Literal& l : c.body)
      for (const Term& t : l.atom.args) collect_vars(t, vars);
    if (vars.empty()) {
      if (atom_fits(c.head)) instances.push_back(c);
      continue;
    }
    std::vector<std::string> var_list(vars.begin(), vars.end());
    for_each_tuple(var_list.size(), universe, [&](const std::vector<const Term*>& tuple) {
      std::map<std::string, Term> sub;
      for (std::size_t i = 0; i < var_list.size(); ++i) sub[var_list[i]] = *tuple[i];
      Clause inst;
      inst.head = substitute(c.head, sub);
      if (!atom_fits(inst.head)) return;
      inst.body.reserve(c.body.size());
      for (const Literal& l : c.body) inst.body.push_back({l.negated, substitute(l.atom, sub)});
      instances.push_back(std::move(inst));
    });
  }

  // Base: constructible atoms within the bound + declared + occurring.
  std::set<Atom> base_set(p.declared_atoms.begin(), p.declared_atoms.end());
  for (const auto& [pname, arity] : sig.predicates) {
    for_each_tuple(arity, universe, [&](const std::vector<const Term*>& tuple) {
      Atom a;
      a.predicate = pname;
      a.args.reserve(arity);
      for (const Term* t : tuple) a.args.push_back(*t);
      if (atom_fits(a)) base_set.insert(std::move(a));
    });
  }
  for (const Clause& c : instances) {
    base_set.insert(c.head);
    for (const Literal& l : c.body) base_set.insert(l.atom);
  }

  // Closed-world truncation: drop instances mentioning a body atom that fell
  // outside the bounded base, then restrict the base to what remains plus
  // the constructible/declared vocabulary.
  std::vector<Clause> kept;
  for (Clause& c : instances) {
    bool ok = atom_fits(c.head);
    for (const Literal& l : c.body)
      if (!atom_fits(l.atom)) ok = false;
    if (ok) kept.push_back(std::move(c));
  }
  for (auto it = base_set.begin(); it != base_set.end();) {
    if (!atom_fits(*it))
      it = base_set.erase(it);
    else
      ++it;
  }

  // Table sorted by rendered text; ids follow display order.
  auto table = std::make_shared<std::vector<Atom>>(base_set.begin(), base_set.end());
  std::sort(table->begin(), table->end(),
            [](const Atom& x, const Atom& y) { return x.render() < y.render(); });
  std::map<Atom, AtomId> ids;
  for (std::size_t i = 0; i < table->size(); ++i) ids[(*table)[i]] = static_cast<AtomId>(i);

  std::vector<GroundClause> ground_clauses;
  std::set<GroundClause> seen;  // ground(P) is a set of clauses
  for (const Clause& c : kept) {
    GroundClause gc;
    gc.head = ids.at(c.head);
    gc.body.reserve(c.body.size());
    for (const Literal& l : c.body) gc.body.push_back({ids.at(l.atom), l.negated});
    if (seen.insert(gc).second) ground_clauses.push_back(std::move(gc));
  }

  std::vector<AtomId> base(table->size());
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = static_cast<AtomId>(i);
  return GroundProgram(std::move(table), std::move(base), std::move(ground_clauses));
}

Program to_program(const GroundProgram& g) {
  Program p;
  for (const GroundClause& gc : g.clauses()) {
    Clause c;
    c.head = g.atom(gc.head);
    for (const GroundLit& l : gc.body) c.body.push_back({l.negated, g.atom(l.atom)});
    p.clauses.push_back(std::move(c));
  }
  for (AtomId id : g.base()) p.declared_atoms.insert(g.atom(id));
  return p;
}

nlohmann::json program_json(const GroundProgram& g) {
  nlohmann::json j;
  j["base"] = g.base_names();
  std::vector<std::string> cs;
  cs.reserve(g.clauses().size());
  for (const GroundClause& c : g.clauses()) cs.push_back(g.render_clause(c));
  j["clauses"] = cs;
  return j;
}

}  // namespace lpsem
