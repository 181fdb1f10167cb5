#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverlab/error.hpp"

namespace qlab {

Quiver::Quiver(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw Error(ErrorCode::InvalidQuiver, "negative vertex count");
  counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
}

void Quiver::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }
}

int Quiver::arrows(int source, int target) const {
  check_vertex(source);
  check_vertex(target);
  return counts_[index(source, target)];
}

void Quiver::add_arrows(int source, int target, int count) {
  check_vertex(source);
  check_vertex(target);
  if (counts_[index(source, target)] + count < 0) {
    throw Error(ErrorCode::InvalidQuiver, "negative arrow multiplicity");
  }
  counts_[index(source, target)] += count;
}

void Quiver::set_arrows(int source, int target, int count) {
  check_vertex(source);
  check_vertex(target);
  if (count < 0) throw Error(ErrorCode::InvalidQuiver, "negative arrow multiplicity");
  counts_[index(source, target)] = count;
}

std::vector<ArrowCount> Quiver::arrow_list() const {
  std::vector<ArrowCount> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (int c = counts_[index(i, j)]; c > 0) out.push_back({i, j, c});
    }
  }
  return out;
}

int Quiver::total_arrows() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool Quiver::is_cluster_quiver() const {
  for (int i = 1; i <= n_; ++i) {
    if (counts_[index(i, i)] != 0) return false;
    for (int j = i + 1; j <= n_; ++j) {
      if (counts_[index(i, j)] > 0 && counts_[index(j, i)] > 0) return false;
    }
  }
  return true;
}

void Quiver::validate_cluster() const {
  for (int i = 1; i <= n_; ++i) {
    if (counts_[index(i, i)] != 0) {
      throw Error(ErrorCode::InvalidQuiver, "loop at vertex " + std::to_string(i));
    }
    for (int j = i + 1; j <= n_; ++j) {
      if (counts_[index(i, j)] > 0 && counts_[index(j, i)] > 0) {
        throw Error(ErrorCode::InvalidQuiver, "oriented 2-cycle between vertices " +
                                                  std::to_string(i) + " and " +
                                                  std::to_string(j));
      }
    }
  }
}

bool Quiver::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 1; w <= n_; ++w) {
      if (!seen[w] && (counts_[index(v, w)] > 0 || counts_[index(w, v)] > 0)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

IceQuiver::IceQuiver(Quiver quiver, std::vector<int> frozen)
    : quiver_(std::move(quiver)),
      frozen_(static_cast<std::size_t>(quiver_.vertex_count()) + 1, false) {
  for (int v : frozen) {
    if (v < 1 || v > quiver_.vertex_count()) {
      throw Error(ErrorCode::InvalidVertex, "frozen vertex " + std::to_string(v) + " out of range");
    }
    frozen_[v] = true;
  }
  quiver_.validate_cluster();
  for (const auto& a : quiver_.arrow_list()) {
    if (frozen_[a.source] && frozen_[a.target]) {
      throw Error(ErrorCode::InvalidQuiver, "arrow between frozen vertices " +
                                                std::to_string(a.source) + " and " +
                                                std::to_string(a.target));
    }
  }
}

bool IceQuiver::is_frozen(int v) const {
  if (v < 1 || v > vertex_count()) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }
  return frozen_[v];
}

std::vector<int> IceQuiver::frozen_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= vertex_count(); ++v) {
    if (frozen_[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> IceQuiver::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= vertex_count(); ++v) {
    if (!frozen_[v]) out.push_back(v);
  }
  return out;
}

std::string IceQuiver::encode() const {
  std::ostringstream os;
  os << vertex_count() << "|F";
  for (int v : frozen_vertices()) os << ' ' << v;
  os << "|A";
  for (const auto& a : quiver_.arrow_list()) os << ' ' << a.source << '>' << a.target << 'x' << a.count;
  return os.str();
}

std::vector<int> CMatrix::row(int vertex) const {
  if (vertex < 1 || vertex > size()) {
    throw Error(ErrorCode::InvalidVertex, "c-matrix row " + std::to_string(vertex) + " out of range");
  }
  std::vector<int> out(entries.cols());
  for (std::size_t c = 0; c < entries.cols(); ++c) {
    out[c] = static_cast<int>(entries(static_cast<std::size_t>(vertex - 1), c));
  }
  return out;
}

const char* to_string(VertexColor color) noexcept {
  return color == VertexColor::Green ? "green" : "red";
}

IceQuiver make_framed(const Quiver& q) {
  q.validate_cluster();
  const int n = q.vertex_count();
  Quiver framed(2 * n);
  for (const auto& a : q.arrow_list()) framed.set_arrows(a.source, a.target, a.count);
  std::vector<int> frozen;
  for (int i = 1; i <= n; ++i) {
    framed.set_arrows(i, n + i, 1);
    frozen.push_back(n + i);
  }
  return IceQuiver(std::move(framed), std::move(frozen));
}

IceQuiver mutate(const IceQuiver& iq, int l) {
  if (iq.is_frozen(l)) {
    throw Error(ErrorCode::MutationAtFrozenVertex,
                "cannot mutate at frozen vertex " + std::to_string(l));
  }
  const Quiver& old = iq.quiver();
  const int n = old.vertex_count();
  Quiver next = old;

  // (1) every path i -> l -> j contributes #(i->l) * #(l->j) arrows i -> j
  for (int i = 1; i <= n; ++i) {
    const int in = old.arrows(i, l);
    if (i == l || in == 0) continue;
    for (int j = 1; j <= n; ++j) {
      const int out = old.arrows(l, j);
      if (j == l || out == 0) continue;
      next.add_arrows(i, j, in * out);
    }
  }
  // (2) reverse every arrow incident to l
  for (int k = 1; k <= n; ++k) {
    if (k == l) continue;
    next.set_arrows(k, l, old.arrows(l, k));
    next.set_arrows(l, k, old.arrows(k, l));
  }
  // (3) cancel 2-cycles maximally, drop frozen-frozen arrows
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (iq.frozen_[i] && iq.frozen_[j]) {
        next.set_arrows(i, j, 0);
        next.set_arrows(j, i, 0);
        continue;
      }
      const int common = std::min(next.arrows(i, j), next.arrows(j, i));
      if (common > 0) {
        next.add_arrows(i, j, -common);
        next.add_arrows(j, i, -common);
      }
    }
  }
  return IceQuiver(std::move(next), iq.frozen_, IceQuiver::Unchecked{});
}

ExchangeMatrix exchange_matrix(const IceQuiver& iq) {
  ExchangeMatrix e;
  e.row_vertices = iq.mutable_vertices();
  const int n = iq.vertex_count();
  e.entries = IntMatrix(e.row_vertices.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < e.row_vertices.size(); ++r) {
    const int i = e.row_vertices[r];
    for (int j = 1; j <= n; ++j) {
      e.entries(r, static_cast<std::size_t>(j - 1)) = iq.arrows(i, j) - iq.arrows(j, i);
    }
  }
  return e;
}

CMatrix c_matrix(const IceQuiver& iq) {
  const int total = iq.vertex_count();
  if (total % 2 != 0) {
    throw Error(ErrorCode::InvalidState, "framed state must have an even vertex count");
  }
  const int n = total / 2;
  for (int v = 1; v <= total; ++v) {
    if (iq.is_frozen(v) != (v > n)) {
      throw Error(ErrorCode::InvalidState,
                  "frozen set must be exactly {" + std::to_string(n + 1) + ".." +
                      std::to_string(total) + "}");
    }
  }
  CMatrix c;
  c.entries = IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      c.entries(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          iq.arrows(i, n + j) - iq.arrows(n + j, i);
    }
  }
  return c;
}

VertexColor vertex_color(const IceQuiver& iq, int vertex) {
  if (iq.is_frozen(vertex)) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(vertex) + " is frozen and has no color");
  }
  bool has_in = false;
  bool has_out = false;
  for (int f : iq.frozen_vertices()) {
    has_in = has_in || iq.arrows(f, vertex) > 0;
    has_out = has_out || iq.arrows(vertex, f) > 0;
  }
  if (has_in == has_out) {
    throw Error(ErrorCode::SignCoherenceViolation,
                "vertex " + std::to_string(vertex) +
                    (has_in ? " has arrows both to and from frozen vertices"
                            : " has no arrows to or from frozen vertices"));
  }
  return has_out ? VertexColor::Green : VertexColor::Red;
}

}  // namespace qlab
