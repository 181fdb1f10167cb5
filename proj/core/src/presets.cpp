#include "quiverlab/presets.hpp"

#include <algorithm>
#include <span>
#include <utility>

#include "quiverlab/error.hpp"

namespace qlab {
namespace detail {
using PresetEntry = std::pair<std::string_view, std::string_view>;
std::span<const PresetEntry> preset_table();
}

std::vector<std::string> list_presets() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::preset_table()) names.emplace_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::optional<std::string_view> preset_text(std::string_view name) {
  for (const auto& [n, text] : detail::preset_table()) {
    if (n == name) return text;
  }
  return std::nullopt;
}

ProblemFile load_preset(std::string_view name) {
  auto text = preset_text(name);
  if (!text) throw Error(ErrorCode::SemanticError, "unknown preset '" + std::string(name) + "'");
  return parse_problem(*text);
}

ProblemFile load_problem_source(const std::string& source) {
  constexpr std::string_view prefix = "preset:";
  if (source.starts_with(prefix)) return load_preset(std::string_view(source).substr(prefix.size()));
  return load_problem(source);
}

}  // namespace qlab
