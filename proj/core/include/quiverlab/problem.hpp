#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/orthogonality.hpp"

namespace qlab {

inline constexpr int kProblemFormatVersion = 1;

/// One input file: a quiver with named arrows, optional relations and/or
/// potential, and optional named B-specifications. See docs/problem-format.md.
struct ProblemFile {
  int format_version = kProblemFormatVersion;
  std::string name;
  std::optional<std::string> preset;
  NamedQuiver quiver;
  std::optional<std::vector<Relation>> relations;
  std::optional<Potential> potential;
  std::vector<BSpec> b_specs;
  /// Set when both relations and a potential are given: whether the cyclic
  /// derivatives match the listed generators up to scalars.
  std::optional<bool> potential_consistent;
  std::vector<std::string> warnings;

  /// Relations take precedence over the potential's derivatives.
  BoundQuiver algebra() const;
  const BSpec* find_b_spec(std::string_view name) const;
};

/// Error(ParseError) with "line L, column C" for malformed JSON,
/// Error(SemanticError) with a JSON pointer for invalid content.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace qlab
