#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/problem.hpp"

namespace qlab {

/// Names of the problem files compiled into the library.
std::vector<std::string> list_presets();

std::optional<std::string_view> preset_text(std::string_view name);

/// Error(SemanticError) for an unknown preset name.
ProblemFile load_preset(std::string_view name);

/// "preset:NAME" loads a built-in problem, anything else is a file path.
ProblemFile load_problem_source(const std::string& source);

}  // namespace qlab
