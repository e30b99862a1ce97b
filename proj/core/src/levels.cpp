#include "lpsem/levels.hpp"

#include <nlohmann/json.hpp>

#include "lpsem/errors.hpp"

namespace lpsem {

std::string Level::render() const {
  if (minor_is_omega()) return "(" + std::to_string(major) + ",omega)";
  if (minor == 0) return std::to_string(major);
  return "(" + std::to_string(major) + "," + std::to_string(minor) + ")";
}

nlohmann::json level_mapping_json(const LevelMapping& l, const GroundProgram& g) {
  nlohmann::json levels = nlohmann::json::object();
  for (const auto& [atom, level] : l.levels) {
    nlohmann::json jl;
    jl["major"] = level.major;
    if (level.minor_is_omega())
      jl["minor"] = "omega";
    else
      jl["minor"] = level.minor;
    levels[g.atom_name(atom)] = std::move(jl);
  }
  return nlohmann::json{{"levels", levels}};
}

LevelMapping level_mapping_from_json(const nlohmann::json& j, const GroundProgram& g) {
  if (!j.contains("levels") || !j.at("levels").is_object())
    throw InvalidInterpretation("levels file must contain a \"levels\" object");
  LevelMapping out;
  for (const auto& [name, value] : j.at("levels").items()) {
    auto id = g.atom_id(name);
    if (!id) throw InvalidInterpretation("unknown atom in levels file: " + name);
    Level level;
    if (value.is_number_unsigned() || value.is_number_integer()) {
      level = Level::of(value.get<std::uint32_t>());
    } else if (value.is_object()) {
      level.major = value.at("major").get<std::uint32_t>();
      if (value.contains("minor")) {
        const auto& m = value.at("minor");
        if (m.is_string() && m.get<std::string>() == "omega")
          level.minor = Level::omega;
        else
          level.minor = m.get<std::uint32_t>();
      }
    } else {
      throw InvalidInterpretation("level for " + name + " must be a number or {major,minor}");
    }
    out.levels[*id] = level;
  }
  return out;
}

}  // namespace lpsem
