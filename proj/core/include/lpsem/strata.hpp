#ifndef LPSEM_STRATA_HPP
#define LPSEM_STRATA_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lpsem/interp.hpp"
#include "lpsem/levels.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

struct Component {
  AtomIdSet atoms;
  bool trivial = false;  // single atom not negatively depending on itself
};

// Dependency relations over the atoms occurring in the program:
//   refers_to(A,B)   B or not B occurs in a body of a clause with head A
//   refers_neg(A,B)  not B occurs in such a body
//   leq(B,A)         (A,B) in the transitive closure of refers_to
//   lt(B,A)          some refers_neg(C,D) with C leq-or-equal A and
//                    B leq-or-equal D
// Components are the classes of mutual lt (plus identity).
class DependencyInfo {
 public:
  const AtomIdSet& atoms() const { return atoms_; }
  const std::vector<std::pair<AtomId, AtomId>>& refers_to() const { return refers_to_; }
  const std::vector<std::pair<AtomId, AtomId>>& refers_neg() const { return refers_neg_; }
  const std::vector<Component>& components() const { return components_; }

  bool leq(AtomId b, AtomId a) const;
  bool lt(AtomId b, AtomId a) const;

 private:
  friend DependencyInfo dependency_info(const GroundProgram& g);

  int pos(AtomId a) const;

  AtomIdSet atoms_;
  std::vector<std::pair<AtomId, AtomId>> refers_to_;
  std::vector<std::pair<AtomId, AtomId>> refers_neg_;
  std::vector<std::vector<char>> leq_;  // leq_[a][b]: b <= a (positions)
  std::vector<std::vector<char>> lt_;   // lt_[a][b]:  b < a
  std::vector<Component> components_;
};

DependencyInfo dependency_info(const GroundProgram& g);

struct BottomStratum {
  AtomIdSet atoms;                            // union of minimal components
  std::vector<Component> minimal_components;  // the evidence
};

// Union of the components that no other component precedes, where C1
// precedes C2 when every atom of C1 negatively depends into C2.
BottomStratum bottom_stratum(const GroundProgram& g);

// Clauses whose head lies in the bottom stratum; base restricted to the
// stratum plus the atoms occurring in those clauses.
GroundProgram bottom_layer(const GroundProgram& g);

// Reduct for the weakly perfect construction, three steps applied once:
// (1) drop clauses with a body literal false in i or head true in i,
// (2) strip body literals true in i,
// (3) drop non-unit clauses whose head also appears as a unit clause.
GroundProgram weakly_perfect_reduct(const GroundProgram& g, const Interpretation& i);

enum class ModelKind { Total, Partial };

struct WeaklyPerfectRound {
  Interpretation accumulated;  // interpretation the round started from
  GroundProgram reduct;
  AtomIdSet eliminated;  // undefined atoms of g that vanished in the reduct
  AtomIdSet stratum;
  GroundProgram layer;
  std::optional<Interpretation> layer_model;  // absent on the stop round
  std::optional<std::string> stop;
};

struct WeaklyPerfectResult {
  Interpretation model;
  ModelKind kind = ModelKind::Partial;
  std::vector<WeaklyPerfectRound> rounds;
};

// Round-by-round weakly perfect model construction: reduce by everything
// known, falsify eliminated atoms, solve the definite layer of the trivial
// minimal components, repeat. Stops with a total model when nothing is
// left, or a partial one once only negation-locked components remain. The
// result is the greatest model certifiable under the Ws condition, which
// sits between the Fitting and the well-founded model.
WeaklyPerfectResult weakly_perfect(const GroundProgram& g);

struct StratificationResult {
  bool stratified = false;
  std::optional<LevelMapping> witness;  // total over the base when stratified
};

// A program is locally stratified iff no dependency cycle runs through a
// negative edge; the witness levels count negative edges along longest
// paths in the component condensation.
StratificationResult locally_stratified(const GroundProgram& g);

nlohmann::json weakly_perfect_json(const WeaklyPerfectResult& r, const GroundProgram& g);

}  // namespace lpsem

#endif
