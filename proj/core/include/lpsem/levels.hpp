#ifndef LPSEM_LEVELS_HPP
#define LPSEM_LEVELS_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "lpsem/syntax.hpp"

namespace lpsem {

// Lexicographic pairs (major, minor) with minor ranging over the naturals
// plus omega; omega compares above every natural. Plain ordinal levels n
// embed as (n, 0).
struct Level {
  static constexpr std::uint32_t omega = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t major = 0;
  std::uint32_t minor = 0;

  static Level of(std::uint32_t n) { return {n, 0}; }
  bool minor_is_omega() const { return minor == omega; }

  auto operator<=>(const Level&) const = default;

  std::string render() const;
};

// Partial assignment of levels to ground atoms. For certification against an
// interpretation the domain must be exactly the defined atoms; negative
// literals take the level of their atom.
struct LevelMapping {
  std::map<AtomId, Level> levels;

  bool has(AtomId a) const { return levels.count(a) != 0; }
  const Level& at(AtomId a) const { return levels.at(a); }
};

nlohmann::json level_mapping_json(const LevelMapping& l, const GroundProgram& g);
// Accepts {"levels":{"atom":{"major":n,"minor":m|"omega"}}}; a bare number
// n is shorthand for {"major":n,"minor":0}.
LevelMapping level_mapping_from_json(const nlohmann::json& j, const GroundProgram& g);

}  // namespace lpsem

#endif
