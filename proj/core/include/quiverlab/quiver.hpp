#pragma once

#include <string>
#include <vector>

#include "quiverlab/matrix.hpp"

namespace qlab {

/// Multiplicity of the arrows between one ordered pair of vertices.
struct ArrowCount {
  int source = 0;
  int target = 0;
  int count = 0;

  friend bool operator==(const ArrowCount&, const ArrowCount&) = default;
};

/// Finite quiver on vertices 1..n, stored as arrow counts per ordered pair.
/// Mutation only ever needs counts; named arrows live in BoundQuiver.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertex_count);

  int vertex_count() const noexcept { return n_; }
  int arrows(int source, int target) const;
  void add_arrows(int source, int target, int count = 1);
  void set_arrows(int source, int target, int count);

  /// Nonzero counts in (source, target) order.
  std::vector<ArrowCount> arrow_list() const;
  int total_arrows() const;

  /// Loop-free and free of oriented 2-cycles.
  bool is_cluster_quiver() const;
  /// Throws Error(InvalidQuiver) naming the first offending arrow.
  void validate_cluster() const;
  /// Connected underlying graph; the empty quiver counts as connected.
  bool is_connected() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  void check_vertex(int v) const;
  std::size_t index(int source, int target) const {
    return static_cast<std::size_t>(source - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(target - 1);
  }

  int n_ = 0;
  std::vector<int> counts_;
};

/// A quiver with a frozen vertex subset. Values are immutable in practice:
/// mutate() returns a new state.
class IceQuiver {
 public:
  IceQuiver() = default;
  /// Validates: no loops, no 2-cycles, no arrows between frozen vertices.
  IceQuiver(Quiver quiver, std::vector<int> frozen);

  const Quiver& quiver() const noexcept { return quiver_; }
  int vertex_count() const noexcept { return quiver_.vertex_count(); }
  int arrows(int source, int target) const { return quiver_.arrows(source, target); }
  bool is_frozen(int v) const;
  std::vector<int> frozen_vertices() const;
  std::vector<int> mutable_vertices() const;

  /// Canonical text encoding of the arrow-count map plus frozen set; equal
  /// states have equal encodings.
  std::string encode() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  friend IceQuiver mutate(const IceQuiver& iq, int vertex);
  struct Unchecked {};
  IceQuiver(Quiver quiver, std::vector<bool> frozen, Unchecked)
      : quiver_(std::move(quiver)), frozen_(std::move(frozen)) {}

  Quiver quiver_;
  std::vector<bool> frozen_;
};

/// Rows are indexed by the mutable vertices (ascending), columns by all
/// vertices: entry = #(i -> j) - #(j -> i).
struct ExchangeMatrix {
  std::vector<int> row_vertices;
  IntMatrix entries;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

/// Frozen-column block of the exchange matrix of a framed-quiver state;
/// row i - 1 is the c-vector of vertex i.
struct CMatrix {
  IntMatrix entries;

  int size() const noexcept { return static_cast<int>(entries.rows()); }
  std::vector<int> row(int vertex) const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;
};

enum class VertexColor { Green, Red };

const char* to_string(VertexColor color) noexcept;

/// Q plus frozen copies n+1..2n and one arrow i -> n+i per vertex.
IceQuiver make_framed(const Quiver& q);

/// Three-step mutation at a mutable vertex: compose through the vertex,
/// reverse its arrows, cancel 2-cycles and drop frozen-frozen arrows.
IceQuiver mutate(const IceQuiver& iq, int vertex);

ExchangeMatrix exchange_matrix(const IceQuiver& iq);

/// Requires frozen set {n+1..2n} on 2n vertices; Error(InvalidState) otherwise.
CMatrix c_matrix(const IceQuiver& iq);

/// Green iff no arrow enters the vertex from a frozen vertex, red iff none
/// leaves to one. Error(SignCoherenceViolation) if both or neither hold.
VertexColor vertex_color(const IceQuiver& iq, int vertex);

}  // namespace qlab
