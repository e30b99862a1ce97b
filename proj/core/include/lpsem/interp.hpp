#ifndef LPSEM_INTERP_HPP
#define LPSEM_INTERP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lpsem/syntax.hpp"

namespace lpsem {

enum class Truth : std::int8_t { False = -1, Undefined = 0, True = 1 };

Truth flip(Truth t);

// A consistent three-valued interpretation, stored as one truth value per
// table atom. Consistency (no atom both true and false) holds by
// representation; from_sets rejects overlapping inputs.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::size_t table_size) : v_(table_size, Truth::Undefined) {}

  static Interpretation from_sets(std::size_t table_size, std::span<const AtomId> true_atoms,
                                  std::span<const AtomId> false_atoms);

  Truth at(AtomId a) const { return v_[static_cast<std::size_t>(a)]; }
  void assign(AtomId a, Truth t) { v_[static_cast<std::size_t>(a)] = t; }
  std::size_t size() const { return v_.size(); }

  std::vector<AtomId> true_atoms() const;
  std::vector<AtomId> false_atoms() const;
  std::vector<AtomId> defined_atoms() const;
  std::size_t defined_count() const;
  bool total_over(std::span<const AtomId> base) const;

  bool operator==(const Interpretation&) const = default;

 private:
  std::vector<Truth> v_;
};

// Two-valued interpretations are sorted atom-id vectors (the true atoms).
using AtomIdSet = std::vector<AtomId>;

bool contains(const AtomIdSet& s, AtomId a);
bool subset(const AtomIdSet& a, const AtomIdSet& b);

// I identified with I ∪ ¬(base ∖ I): every base atom defined, others untouched.
Interpretation totalize(std::size_t table_size, const AtomIdSet& true_atoms,
                        std::span<const AtomId> base);

Truth literal_value(const Interpretation& i, const GroundLit& l);
Truth body_value(const Interpretation& i, const GroundClause& c);

// body true => head true; body undefined => head true or undefined.
bool is_model(const GroundProgram& g, const Interpretation& i);
bool is_two_valued_model(const GroundProgram& g, const AtomIdSet& m);

// Knowledge order: true and false sets both grow.
bool knowledge_leq(const Interpretation& i, const Interpretation& j);

std::string interpretation_text(const Interpretation& i, const GroundProgram& g);
nlohmann::json interpretation_json(const Interpretation& i, const GroundProgram& g);
// Reads {"true":[...],"false":[...]}; unknown atoms or overlap are rejected.
Interpretation interpretation_from_json(const nlohmann::json& j, const GroundProgram& g);

}  // namespace lpsem

#endif
