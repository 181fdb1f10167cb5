#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace qlab {

using IntVector = std::vector<int>;

/// A framed-quiver state together with the mutations that produced it and
/// the c-vector recorded at each of them (row of the mutated vertex, taken
/// before the mutation).
struct SearchState {
  IceQuiver state;
  std::vector<int> history;
  std::vector<IntVector> trace;

  static SearchState initial(const Quiver& q);

  int mutable_count() const { return state.vertex_count() / 2; }
  bool all_red() const;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

std::vector<int> green_vertices(const SearchState& s);

/// Green-only step; Error(NotGreen) if the vertex is red.
SearchState step(const SearchState& s, int vertex);

/// Mutates at any mutable vertex; the recorded c-vector may be negative.
SearchState explore_step(const SearchState& s, int vertex);

/// Rebuilds a state from the framed quiver by applying `history` in order.
SearchState replay(const Quiver& q, std::span<const int> history, bool green_only = true);

struct GreenSequence {
  std::vector<int> vertices;
  std::vector<IntVector> c_vectors;
  bool maximal = false;

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const GreenSequence&, const GreenSequence&) = default;
};

struct SearchBounds {
  int max_len = 0;  // 0 means 4 * n
  std::int64_t max_states = 10'000'000;

  int effective_max_len(int n) const { return max_len > 0 ? max_len : 4 * n; }
};

struct MgsOptions {
  SearchBounds bounds;
  /// Stop after this many maximal sequences (0 = no limit). Hitting the
  /// limit is not truncation.
  std::size_t max_results = 0;
  /// Count distinct states visited (memoized on IceQuiver::encode()).
  bool count_distinct_states = false;
  /// Called once per visited state, including the root.
  std::function<void(const IceQuiver&)> on_state;
};

struct MgsResult {
  std::vector<GreenSequence> sequences;
  /// A depth or state bound cut the search; the list may be incomplete.
  bool truncated = false;
  std::int64_t states_visited = 0;
  std::optional<std::size_t> distinct_states;
};

/// All maximal green sequences of q, sorted by length and then
/// lexicographically by vertex list.
MgsResult enumerate_mgs(const Quiver& q, const MgsOptions& options = {});

/// Maximal green completions of `from`: every returned sequence starts with
/// from.history and continues with green mutations only.
MgsResult complete_mgs(const SearchState& from, const MgsOptions& options = {});

struct SpectrumReport {
  std::size_t count = 0;
  std::map<int, std::size_t> length_counts;
  int min_length = 0;
  int max_length = 0;
  bool truncated = false;
};

SpectrumReport mgs_spectrum(const Quiver& q, const SearchBounds& bounds = {});
SpectrumReport spectrum_of(const MgsResult& result);

}  // namespace qlab
