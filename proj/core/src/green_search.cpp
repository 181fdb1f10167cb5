#include "quiverlab/green_search.hpp"

#include <algorithm>
#include <unordered_set>

#include "quiverlab/error.hpp"

namespace qlab {

SearchState SearchState::initial(const Quiver& q) { return SearchState{make_framed(q), {}, {}}; }

bool SearchState::all_red() const {
  for (int v = 1; v <= mutable_count(); ++v) {
    if (vertex_color(state, v) == VertexColor::Green) return false;
  }
  return true;
}

std::vector<int> green_vertices(const SearchState& s) {
  std::vector<int> out;
  for (int v = 1; v <= s.mutable_count(); ++v) {
    if (vertex_color(s.state, v) == VertexColor::Green) out.push_back(v);
  }
  return out;
}

SearchState explore_step(const SearchState& s, int vertex) {
  if (vertex < 1 || vertex > s.state.vertex_count()) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(vertex) + " out of range");
  }
  if (s.state.is_frozen(vertex)) {
    throw Error(ErrorCode::MutationAtFrozenVertex,
                "cannot mutate at frozen vertex " + std::to_string(vertex));
  }
  SearchState next;
  next.trace = s.trace;
  next.trace.push_back(c_matrix(s.state).row(vertex));
  next.history = s.history;
  next.history.push_back(vertex);
  next.state = mutate(s.state, vertex);
  return next;
}

SearchState step(const SearchState& s, int vertex) {
  if (vertex >= 1 && vertex <= s.mutable_count() &&
      vertex_color(s.state, vertex) != VertexColor::Green) {
    throw Error(ErrorCode::NotGreen, "vertex " + std::to_string(vertex) + " is red");
  }
  return explore_step(s, vertex);
}

SearchState replay(const Quiver& q, std::span<const int> history, bool green_only) {
  SearchState s = SearchState::initial(q);
  for (int v : history) s = green_only ? step(s, v) : explore_step(s, v);
  return s;
}

namespace {

class MgsSearch {
 public:
  MgsSearch(const MgsOptions& options, int n) : options_(options), n_(n) {
    max_len_ = options.bounds.effective_max_len(n);
  }

  MgsResult run(const SearchState& root) {
    vertices_ = root.history;
    c_vectors_ = root.trace;
    visit(root.state);
    if (options_.count_distinct_states) result_.distinct_states = seen_.size();
    std::sort(result_.sequences.begin(), result_.sequences.end(),
              [](const GreenSequence& a, const GreenSequence& b) {
                if (a.vertices.size() != b.vertices.size()) {
                  return a.vertices.size() < b.vertices.size();
                }
                return a.vertices < b.vertices;
              });
    return std::move(result_);
  }

 private:
  // A depth cap only prunes its branch; an exhausted state budget ends the
  // whole search.
  bool stopped() const {
    return budget_exhausted_ ||
           (options_.max_results > 0 && result_.sequences.size() >= options_.max_results);
  }

  void visit(const IceQuiver& state) {
    if (stopped()) return;
    if (++result_.states_visited > options_.bounds.max_states) {
      result_.truncated = true;
      budget_exhausted_ = true;
      return;
    }
    if (options_.on_state) options_.on_state(state);
    if (options_.count_distinct_states) seen_.insert(state.encode());

    const CMatrix c = c_matrix(state);
    std::vector<int> green;
    for (int v = 1; v <= n_; ++v) {
      if (vertex_color(state, v) == VertexColor::Green) green.push_back(v);
    }
    if (green.empty()) {
      result_.sequences.push_back(GreenSequence{vertices_, c_vectors_, true});
      return;
    }
    if (static_cast<int>(vertices_.size()) >= max_len_) {
      result_.truncated = true;
      return;
    }
    for (int v : green) {
      vertices_.push_back(v);
      c_vectors_.push_back(c.row(v));
      visit(mutate(state, v));
      vertices_.pop_back();
      c_vectors_.pop_back();
      if (stopped()) return;
    }
  }

  const MgsOptions& options_;
  int n_;
  int max_len_ = 0;
  bool budget_exhausted_ = false;
  std::vector<int> vertices_;
  std::vector<IntVector> c_vectors_;
  std::unordered_set<std::string> seen_;
  MgsResult result_;
};

}  // namespace

MgsResult enumerate_mgs(const Quiver& q, const MgsOptions& options) {
  return complete_mgs(SearchState::initial(q), options);
}

MgsResult complete_mgs(const SearchState& from, const MgsOptions& options) {
  MgsSearch search(options, from.mutable_count());
  return search.run(from);
}

SpectrumReport spectrum_of(const MgsResult& result) {
  SpectrumReport report;
  report.truncated = result.truncated;
  report.count = result.sequences.size();
  for (const auto& seq : result.sequences) ++report.length_counts[seq.length()];
  if (!report.length_counts.empty()) {
    report.min_length = report.length_counts.begin()->first;
    report.max_length = report.length_counts.rbegin()->first;
  }
  return report;
}

SpectrumReport mgs_spectrum(const Quiver& q, const SearchBounds& bounds) {
  MgsOptions options;
  options.bounds = bounds;
  return spectrum_of(enumerate_mgs(q, options));
}

}  // namespace qlab
