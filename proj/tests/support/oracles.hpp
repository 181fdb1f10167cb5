#pragma once

// Reference computations kept apart from the library: they share no code
// with the engines they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "quiverlab/green_search.hpp"
#include "quiverlab/quiver.hpp"

namespace oracle {

using SkewMatrix = std::vector<std::vector<int>>;

/// Skew-symmetric matrix b[i][j] = #(i -> j) - #(j -> i), 0-indexed.
inline SkewMatrix skew_of(const qlab::Quiver& q) {
  const int n = q.vertex_count();
  SkewMatrix b(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) b[i - 1][j - 1] = q.arrows(i, j) - q.arrows(j, i);
  }
  return b;
}

/// Matrix mutation at k (0-indexed):
/// b'_ij = -b_ij if i or j is k, else b_ij + sgn(b_ik) max(b_ik b_kj, 0).
/// Entries between two frozen indices are zeroed afterwards.
inline SkewMatrix matrix_mutate(const SkewMatrix& b, int k, int frozen_from) {
  const int n = static_cast<int>(b.size());
  SkewMatrix out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const int s = (b[i][k] > 0) - (b[i][k] < 0);
        out[i][j] = b[i][j] + s * std::max(b[i][k] * b[k][j], 0);
      }
      if (i >= frozen_from && j >= frozen_from) out[i][j] = 0;
    }
  }
  return out;
}

/// Extended skew matrix of the framed quiver: mutable block q, then an
/// identity block toward the frozen copies.
inline SkewMatrix framed_skew(const qlab::Quiver& q) {
  const int n = q.vertex_count();
  SkewMatrix b(2 * n, std::vector<int>(2 * n, 0));
  const auto core = skew_of(q);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b[i][j] = core[i][j];
    b[i][n + i] = 1;
    b[n + i][i] = -1;
  }
  return b;
}

struct Sequence {
  std::vector<int> vertices;
  std::vector<std::vector<int>> c_vectors;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;
};

/// Exhaustive green-sequence search on skew matrices. A vertex is green when
/// its row toward the frozen block is nonnegative and nonzero.
inline void mgs_dfs(const SkewMatrix& b, int n, Sequence& cur, std::set<Sequence>& out, int depth_left) {
  bool any_green = false;
  for (int k = 0; k < n; ++k) {
    std::vector<int> c(b[k].begin() + n, b[k].end());
    const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonzero = std::any_of(c.begin(), c.end(), [](int x) { return x != 0; });
    if (!(nonneg && nonzero)) continue;
    any_green = true;
    if (depth_left == 0) continue;
    cur.vertices.push_back(k + 1);
    cur.c_vectors.push_back(c);
    mgs_dfs(matrix_mutate(b, k, n), n, cur, out, depth_left - 1);
    cur.vertices.pop_back();
    cur.c_vectors.pop_back();
  }
  if (!any_green) out.insert(cur);
}

inline std::set<Sequence> all_mgs(const qlab::Quiver& q, int max_len) {
  std::set<Sequence> out;
  Sequence cur;
  mgs_dfs(framed_skew(q), q.vertex_count(), cur, out, max_len);
  return out;
}

/// Random acyclic quiver on n vertices: arrows only go from lower to higher
/// index, with at most `max_mult` parallel arrows.
inline qlab::Quiver random_acyclic(std::mt19937_64& rng, int n, int max_mult = 1) {
  qlab::Quiver q(n);
  std::uniform_int_distribution<int> mult(0, max_mult);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int m = mult(rng);
      if (m > 0) q.set_arrows(i, j, m);
    }
  }
  return q;
}

/// Random cluster quiver: each unordered pair gets 0..max_mult arrows in a
/// random direction.
inline qlab::Quiver random_cluster(std::mt19937_64& rng, int n, int max_mult = 2) {
  qlab::Quiver q(n);
  std::uniform_int_distribution<int> mult(0, max_mult);
  std::bernoulli_distribution flip(0.5);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int m = mult(rng);
      if (m == 0) continue;
      if (flip(rng)) {
        q.set_arrows(i, j, m);
      } else {
        q.set_arrows(j, i, m);
      }
    }
  }
  return q;
}

inline qlab::Quiver linear_a(int n) {
  qlab::Quiver q(n);
  for (int i = 1; i < n; ++i) q.set_arrows(i, i + 1, 1);
  return q;
}

}  // namespace oracle
