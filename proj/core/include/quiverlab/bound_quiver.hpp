#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiverlab/quiver.hpp"
#include "quiverlab/rational.hpp"

namespace qlab {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow indices in walk order: {a, b} means "a, then b".
using Path = std::vector<std::size_t>;

struct PathTerm {
  Rational coeff;
  Path path;

  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

/// Formal linear combination of parallel paths.
struct Relation {
  std::vector<PathTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Linear combination of cycles; each term's path is read cyclically.
struct Potential {
  std::vector<PathTerm> terms;

  friend bool operator==(const Potential&, const Potential&) = default;
};

/// Quiver with named arrows, vertices 1..n.
class NamedQuiver {
 public:
  NamedQuiver() = default;
  /// Validates vertex ranges, unique nonempty names and absence of loops.
  NamedQuiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }

  std::optional<std::size_t> find_arrow(std::string_view name) const;
  /// Error(UnknownArrow) if absent.
  std::size_t arrow_index(std::string_view name) const;
  Path path_from_names(std::span<const std::string> names) const;

  /// True if consecutive arrows compose (target of one is source of next).
  bool is_walk(const Path& path) const;
  int path_source(const Path& path) const;
  int path_target(const Path& path) const;
  std::string path_name(const Path& path) const;

  /// Arrow-count view used by the mutation engine.
  Quiver count_quiver() const;

  friend bool operator==(const NamedQuiver&, const NamedQuiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

/// Path algebra modulo an admissible ideal given by generators.
class BoundQuiver {
 public:
  BoundQuiver() = default;
  /// Validates every relation: nonempty, composable parallel paths of
  /// length >= 2. Throws Error(InvalidRelation) otherwise.
  BoundQuiver(NamedQuiver quiver, std::vector<Relation> relations = {});

  const NamedQuiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  int vertex_count() const noexcept { return quiver_.vertex_count(); }
  const std::vector<Arrow>& arrows() const noexcept { return quiver_.arrows(); }

  std::string relation_name(const Relation& relation) const;

  friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;

 private:
  NamedQuiver quiver_;
  std::vector<Relation> relations_;
};

/// Cyclic derivative of the potential with respect to every arrow; arrows
/// whose derivative vanishes are skipped. Error(InvalidPotential) if a term
/// is not a closed walk.
std::vector<Relation> cyclic_derivatives(const NamedQuiver& quiver, const Potential& potential);

/// Like terms combined, zero terms dropped, terms sorted by path, leading
/// coefficient scaled to 1. The zero relation normalizes to no terms.
Relation normalized(const Relation& relation);

/// True iff every generator of each list is a nonzero scalar multiple of
/// some generator of the other list.
bool generators_match_up_to_scalar(std::span<const Relation> lhs, std::span<const Relation> rhs);

}  // namespace qlab
