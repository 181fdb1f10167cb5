#include "quiverlab/module_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "quiverlab/error.hpp"

namespace qlab {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// All support vertices joined by the given arrows.
bool connects(const NamedQuiver& quiver, const std::vector<bool>& in_support,
              const std::vector<std::size_t>& arrows) {
  const int n = quiver.vertex_count();
  UnionFind uf(static_cast<std::size_t>(n) + 1);
  for (auto ai : arrows) uf.unite(quiver.arrow(ai).source, quiver.arrow(ai).target);
  std::optional<std::size_t> root;
  for (int v = 1; v <= n; ++v) {
    if (!in_support[v]) continue;
    if (!root) root = uf.find(v);
    if (uf.find(v) != *root) return false;
  }
  return true;
}

void insert_up_to_iso(std::vector<Representation>& modules, Representation m, const BoundQuiver& bq) {
  for (const auto& existing : modules) {
    if (existing.dims() == m.dims() && are_isomorphic(existing, m, bq)) return;
  }
  modules.push_back(std::move(m));
}

// ---------------------------------------------------------------------------
// thin modules

using Exponent = std::vector<int>;

struct ChordSystem {
  bool infeasible = false;
  std::vector<std::pair<Exponent, Rational>> binomials;  // X^e = target
  std::vector<std::vector<std::pair<Exponent, Rational>>> generic;  // sum c X^e = 0
};

Rational monomial(const Exponent& e, const std::vector<Rational>& x) {
  Rational out(1);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) out *= x[k].pow(e[k]);
  }
  return out;
}

bool satisfies(const ChordSystem& sys, const std::vector<Rational>& x) {
  for (const auto& [e, target] : sys.binomials) {
    if (monomial(e, x) != target) return false;
  }
  for (const auto& row : sys.generic) {
    Rational sum;
    for (const auto& [e, c] : row) sum += c * monomial(e, x);
    if (!sum.is_zero()) return false;
  }
  return true;
}

/// Chord values solving the system. `complete` is cleared when the answer
/// came from sampling rather than an exact solve.
std::vector<std::vector<Rational>> solve_chords(const ChordSystem& sys, std::size_t chords,
                                                bool& complete) {
  if (chords == 0) return {{}};
  if (sys.generic.empty() && !sys.binomials.empty()) {
    RationalMatrix selected(0, chords);
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < sys.binomials.size() && rows.size() < chords; ++r) {
      RationalMatrix trial(rows.size() + 1, chords);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = 0; k < chords; ++k) trial(i, k) = selected(i, k);
      }
      for (std::size_t k = 0; k < chords; ++k) trial(rows.size(), k) = sys.binomials[r].first[k];
      if (rank(trial) == rows.size() + 1) {
        selected = std::move(trial);
        rows.push_back(r);
      }
    }
    if (rows.size() == chords) {
      const Rational det = determinant(selected);
      if (det == Rational(1) || det == Rational(-1)) {
        const RationalMatrix inv = *inverse(selected);
        std::vector<Rational> x(chords, Rational(1));
        for (std::size_t j = 0; j < chords; ++j) {
          for (std::size_t i = 0; i < chords; ++i) {
            x[j] *= sys.binomials[rows[i]].second.pow(static_cast<int>(inv(j, i).num()));
          }
        }
        if (satisfies(sys, x)) return {x};
        return {};
      }
    }
  }

  // Underdetermined, non-unimodular or with 3+-term rows: sample.
  complete = false;
  std::vector<Rational> values{Rational(1), Rational(-1)};
  for (const auto& [e, t] : sys.binomials) {
    values.push_back(t);
    values.push_back(t.inverse());
  }
  for (const auto& row : sys.generic) {
    for (const auto& [ea, ca] : row) {
      for (const auto& [eb, cb] : row) {
        if (&ea != &eb) values.push_back(-(ca / cb));
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> digit(chords, 0);
  std::size_t budget = 100'000;
  while (budget-- > 0) {
    std::vector<Rational> x(chords);
    for (std::size_t k = 0; k < chords; ++k) x[k] = values[digit[k]];
    if (satisfies(sys, x)) out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < chords && ++digit[k] == values.size()) digit[k++] = 0;
    if (k == chords) break;
  }
  return out;
}

}  // namespace

ModuleCatalog enumerate_thin_schurian(const BoundQuiver& bq) {
  const auto& quiver = bq.quiver();
  const int n = quiver.vertex_count();
  if (n > 20) throw Error(ErrorCode::CatalogTooLarge, "thin enumeration supports at most 20 vertices");

  ModuleCatalog catalog;
  catalog.algebra = bq;
  catalog.dim_bound = 1;
  catalog.complete_thin = true;

  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> in_support(static_cast<std::size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v) in_support[v] = (mask >> (v - 1)) & 1u;

    std::vector<std::size_t> support_arrows;
    for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
      const auto& a = quiver.arrow(ai);
      if (in_support[a.source] && in_support[a.target]) support_arrows.push_back(ai);
    }
    if (!connects(quiver, in_support, support_arrows)) continue;
    if (support_arrows.size() > 24) {
      throw Error(ErrorCode::CatalogTooLarge, "support with more than 24 arrows");
    }

    for (std::uint32_t zmask = 0; zmask < (1u << support_arrows.size()); ++zmask) {
      std::vector<std::size_t> nonzero;
      for (std::size_t k = 0; k < support_arrows.size(); ++k) {
        if ((zmask >> k) & 1u) nonzero.push_back(support_arrows[k]);
      }
      if (!connects(quiver, in_support, nonzero)) continue;

      // spanning tree of the nonzero arrows, in arrow order; the rest are chords
      std::vector<int> chord_of(quiver.arrow_count(), -1);
      std::vector<bool> is_nonzero(quiver.arrow_count(), false);
      std::size_t chords = 0;
      {
        UnionFind uf(static_cast<std::size_t>(n) + 1);
        for (auto ai : nonzero) {
          is_nonzero[ai] = true;
          if (!uf.unite(quiver.arrow(ai).source, quiver.arrow(ai).target)) {
            chord_of[ai] = static_cast<int>(chords++);
          }
        }
      }

      ChordSystem sys;
      for (const auto& rel : bq.relations()) {
        std::map<Exponent, Rational> grouped;
        for (const auto& term : rel.terms) {
          bool survives = true;
          Exponent e(chords, 0);
          for (auto ai : term.path) {
            if (!is_nonzero[ai]) {
              survives = false;
              break;
            }
            if (chord_of[ai] >= 0) ++e[chord_of[ai]];
          }
          if (survives) grouped[e] += term.coeff;
        }
        std::vector<std::pair<Exponent, Rational>> row;
        for (auto& [e, c] : grouped) {
          if (!c.is_zero()) row.emplace_back(e, c);
        }
        if (row.size() == 1) {
          sys.infeasible = true;
          break;
        }
        if (row.size() == 2) {
          Exponent diff(chords);
          for (std::size_t k = 0; k < chords; ++k) diff[k] = row[0].first[k] - row[1].first[k];
          sys.binomials.emplace_back(std::move(diff), -(row[1].second / row[0].second));
        } else if (row.size() > 2) {
          sys.generic.push_back(std::move(row));
        }
      }
      if (sys.infeasible) continue;

      bool exact = true;
      auto solutions = solve_chords(sys, chords, exact);
      if (!exact) catalog.complete_thin = false;

      for (const auto& x : solutions) {
        DimVector dims(static_cast<std::size_t>(n), 0);
        for (int v = 1; v <= n; ++v) dims[v - 1] = in_support[v] ? 1 : 0;
        std::vector<RationalMatrix> mats;
        for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
          const auto& a = quiver.arrow(ai);
          RationalMatrix m(static_cast<std::size_t>(dims[a.source - 1]),
                           static_cast<std::size_t>(dims[a.target - 1]));
          if (is_nonzero[ai]) m(0, 0) = chord_of[ai] >= 0 ? x[chord_of[ai]] : Rational(1);
          mats.push_back(std::move(m));
        }
        Representation rep(quiver, std::move(dims), std::move(mats));
        if (!check_relations(rep, bq).empty() || !is_schurian(rep, bq)) {
          throw std::logic_error("thin enumeration produced an invalid module");
        }
        insert_up_to_iso(catalog.modules, std::move(rep), bq);
      }
    }
  }
  std::sort(catalog.modules.begin(), catalog.modules.end(), canonical_less);
  return catalog;
}

// ---------------------------------------------------------------------------
// sampled search

namespace {

struct IntRelation {
  std::vector<std::pair<std::int64_t, Path>> terms;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t ready_at = 0;
};

std::vector<IntMatrix> all_matrices(std::size_t rows, std::size_t cols, int field_size) {
  const std::size_t cells = rows * cols;
  std::size_t count = 1;
  for (std::size_t k = 0; k < cells; ++k) count *= static_cast<std::size_t>(field_size);
  std::vector<IntMatrix> out;
  out.reserve(count);
  std::vector<int> digit(cells, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < cells; ++k) m(k / cols, k % cols) = digit[k];
    out.push_back(std::move(m));
    for (std::size_t k = 0; k < cells && ++digit[k] == field_size; ++k) digit[k] = 0;
  }
  return out;
}

std::vector<IntMatrix> rank_normal_forms(std::size_t rows, std::size_t cols) {
  std::vector<IntMatrix> out;
  for (std::size_t r = 0; r <= std::min(rows, cols); ++r) {
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < r; ++k) m(k, k) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

std::int64_t lcm_of_denominators(const Relation& rel) {
  std::int64_t l = 1;
  for (const auto& t : rel.terms) l = std::lcm(l, t.coeff.den());
  return l;
}

class SampledSearch {
 public:
  SampledSearch(const BoundQuiver& bq, int field_size, std::int64_t budget, ModuleCatalog& catalog)
      : bq_(bq), quiver_(bq.quiver()), field_size_(field_size), budget_(budget), catalog_(catalog) {}

  void run_dims(const DimVector& dims) {
    dims_ = dims;
    const auto arrows = quiver_.arrow_count();
    auto d = [&](int v) { return static_cast<std::size_t>(dims_[v - 1]); };

    // active arrows: both endpoint spaces nonzero
    std::vector<std::size_t> active;
    for (std::size_t ai = 0; ai < arrows; ++ai) {
      const auto& a = quiver_.arrow(ai);
      if (d(a.source) > 0 && d(a.target) > 0) active.push_back(ai);
    }
    // vertex-disjoint matching, restricted to rank normal forms
    std::vector<bool> used(static_cast<std::size_t>(quiver_.vertex_count()) + 1, false);
    std::vector<std::size_t> order;
    std::vector<bool> normalized(arrows, false);
    for (auto ai : active) {
      const auto& a = quiver_.arrow(ai);
      if (!used[a.source] && !used[a.target]) {
        used[a.source] = used[a.target] = true;
        normalized[ai] = true;
        order.push_back(ai);
      }
    }

    std::vector<IntRelation> relations;
    std::vector<std::vector<std::size_t>> rel_arrows;
    for (const auto& rel : bq_.relations()) {
      IntRelation ir;
      const int s = quiver_.path_source(rel.terms.front().path);
      const int t = quiver_.path_target(rel.terms.front().path);
      ir.rows = d(s);
      ir.cols = d(t);
      if (ir.rows == 0 || ir.cols == 0) continue;
      const std::int64_t scale = lcm_of_denominators(rel);
      std::vector<std::size_t> needed;
      for (const auto& term : rel.terms) {
        bool survives = true;
        for (auto ai : term.path) {
          const auto& a = quiver_.arrow(ai);
          survives = survives && d(a.source) > 0 && d(a.target) > 0;
        }
        if (!survives) continue;
        ir.terms.emplace_back((term.coeff * Rational(scale)).num(), term.path);
        needed.insert(needed.end(), term.path.begin(), term.path.end());
      }
      if (ir.terms.empty()) continue;
      relations.push_back(std::move(ir));
      rel_arrows.push_back(std::move(needed));
    }

    // remaining arrows: greedily complete as many relations as early as possible
    std::vector<bool> placed(arrows, false);
    for (auto ai : order) placed[ai] = true;
    std::vector<std::size_t> rest;
    for (auto ai : active) {
      if (!placed[ai]) rest.push_back(ai);
    }
    while (!rest.empty()) {
      std::size_t best = 0;
      int best_score = -1;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        int score = 0;
        for (const auto& needed : rel_arrows) {
          bool completes = std::find(needed.begin(), needed.end(), rest[k]) != needed.end();
          for (auto ai : needed) completes = completes && (placed[ai] || ai == rest[k]);
          score += completes ? 1 : 0;
        }
        if (score > best_score) {
          best_score = score;
          best = k;
        }
      }
      placed[rest[best]] = true;
      order.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }

    std::vector<std::size_t> position(arrows, 0);
    for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
    ready_.assign(order.size(), {});
    for (std::size_t r = 0; r < relations.size(); ++r) {
      std::size_t at = 0;
      for (auto ai : rel_arrows[r]) at = std::max(at, position[ai]);
      relations[r].ready_at = at;
    }
    relations_ = std::move(relations);
    for (std::size_t r = 0; r < relations_.size(); ++r) ready_[relations_[r].ready_at].push_back(r);

    order_ = order;
    options_.clear();
    for (auto ai : order_) {
      const auto& a = quiver_.arrow(ai);
      const auto rows = d(a.source);
      const auto cols = d(a.target);
      if (normalized[ai]) {
        options_.push_back(rank_normal_forms(rows, cols));
      } else {
        options_.push_back(shape_options(rows, cols));
      }
    }

    current_.assign(arrows, IntMatrix());
    for (std::size_t ai = 0; ai < arrows; ++ai) {
      const auto& a = quiver_.arrow(ai);
      current_[ai] = IntMatrix(d(a.source), d(a.target));
    }
    support_.assign(static_cast<std::size_t>(quiver_.vertex_count()) + 1, false);
    for (int v = 1; v <= quiver_.vertex_count(); ++v) support_[v] = d(v) > 0;
    dfs(0);
  }

  bool truncated() const { return truncated_; }

 private:
  const std::vector<IntMatrix>* shape_options(std::size_t rows, std::size_t cols) {
    auto key = std::make_pair(rows, cols);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::size_t count = 1;
      for (std::size_t k = 0; k < rows * cols; ++k) {
        count *= static_cast<std::size_t>(field_size_);
        if (count > 5'000'000) throw Error(ErrorCode::CatalogTooLarge, "arrow matrix space too large to sample");
      }
      it = cache_.emplace(key, all_matrices(rows, cols, field_size_)).first;
    }
    return &it->second;
  }

  struct Options {
    std::vector<IntMatrix> owned;
    const std::vector<IntMatrix>* shared = nullptr;
    Options(std::vector<IntMatrix> v) : owned(std::move(v)) {}  // NOLINT
    Options(const std::vector<IntMatrix>* v) : shared(v) {}      // NOLINT
    const std::vector<IntMatrix>& get() const { return shared ? *shared : owned; }
  };

  bool relation_holds(const IntRelation& rel) const {
    IntMatrix sum(rel.rows, rel.cols);
    for (const auto& [coeff, path] : rel.terms) {
      IntMatrix prod = current_[path.front()];
      for (std::size_t k = 1; k < path.size(); ++k) prod = prod * current_[path[k]];
      sum += prod * coeff;
    }
    return sum.is_zero();
  }

  void dfs(std::size_t depth) {
    if (truncated_) return;
    if (++nodes_ > budget_) {
      truncated_ = true;
      return;
    }
    if (depth == order_.size()) {
      leaf();
      return;
    }
    const std::size_t ai = order_[depth];
    for (const auto& option : options_[depth].get()) {
      current_[ai] = option;
      bool ok = true;
      for (auto r : ready_[depth]) {
        if (!relation_holds(relations_[r])) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(depth + 1);
      if (truncated_) return;
    }
    current_[ai] = IntMatrix(current_[ai].rows(), current_[ai].cols());
  }

  void leaf() {
    std::vector<std::size_t> nonzero;
    for (std::size_t ai = 0; ai < current_.size(); ++ai) {
      if (!current_[ai].is_zero()) nonzero.push_back(ai);
    }
    if (!connects(quiver_, support_, nonzero)) return;
    auto sys = hom_system<std::int64_t>(quiver_, dims_, current_, dims_, current_);
    auto r = integer_rank(sys);
    if (r && sys.cols() - *r != 1) return;

    std::vector<RationalMatrix> mats;
    for (const auto& m : current_) mats.push_back(to_rational(m));
    Representation rep(quiver_, dims_, std::move(mats));
    if (!check_relations(rep, bq_).empty() || !is_schurian(rep, bq_)) return;
    insert_up_to_iso(catalog_.modules, std::move(rep), bq_);
  }

  const BoundQuiver& bq_;
  const NamedQuiver& quiver_;
  int field_size_;
  std::int64_t budget_;
  ModuleCatalog& catalog_;

  DimVector dims_;
  std::vector<std::size_t> order_;
  std::vector<Options> options_;
  std::vector<IntRelation> relations_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<IntMatrix> current_;
  std::vector<bool> support_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<IntMatrix>> cache_;
  std::int64_t nodes_ = 0;
  bool truncated_ = false;
};

bool support_connected(const NamedQuiver& quiver, const DimVector& dims) {
  std::vector<bool> in_support(static_cast<std::size_t>(quiver.vertex_count()) + 1, false);
  for (int v = 1; v <= quiver.vertex_count(); ++v) in_support[v] = dims[v - 1] > 0;
  std::vector<std::size_t> arrows(quiver.arrow_count());
  std::iota(arrows.begin(), arrows.end(), 0);
  return connects(quiver, in_support, arrows);
}

}  // namespace

ModuleCatalog enumerate_schurian(const BoundQuiver& bq, int max_entry, int field_size,
                                 std::int64_t budget) {
  if (max_entry < 1) throw std::invalid_argument("max_entry must be at least 1");
  if (field_size < 2) throw std::invalid_argument("field_size must be at least 2");
  const auto& quiver = bq.quiver();
  const int n = quiver.vertex_count();

  ModuleCatalog catalog;
  catalog.algebra = bq;
  catalog.dim_bound = max_entry;
  catalog.field_size = field_size;

  SampledSearch search(bq, field_size, budget, catalog);
  DimVector dims(static_cast<std::size_t>(n), 0);
  while (true) {
    std::size_t k = 0;
    while (k < dims.size() && ++dims[k] > max_entry) dims[k++] = 0;
    if (k == dims.size()) break;
    if (!support_connected(quiver, dims)) continue;
    search.run_dims(dims);
    if (search.truncated()) {
      catalog.truncated = true;
      break;
    }
  }
  std::sort(catalog.modules.begin(), catalog.modules.end(), canonical_less);
  return catalog;
}

ModuleCatalog build_catalog(const BoundQuiver& bq, const CatalogOptions& options) {
  ModuleCatalog catalog = enumerate_thin_schurian(bq);
  if (options.max_entry <= 1) return catalog;
  ModuleCatalog general = enumerate_schurian(bq, options.max_entry, options.field_size, options.budget);
  for (auto& m : general.modules) insert_up_to_iso(catalog.modules, std::move(m), bq);
  catalog.dim_bound = options.max_entry;
  catalog.field_size = options.field_size;
  catalog.truncated = general.truncated;
  std::sort(catalog.modules.begin(), catalog.modules.end(), canonical_less);
  return catalog;
}

bool are_isomorphic(const Representation& m, const Representation& n, const BoundQuiver& bq) {
  if (m.dims() != n.dims()) return false;
  if (m == n) return true;
  const HomSpace hom = hom_space(m, n, bq);
  if (hom.dimension == 0) return false;
  const int vertices = bq.vertex_count();
  const int degree = m.total_dimension();

  auto invertible = [&](const std::vector<std::int64_t>& coeffs) {
    for (int v = 1; v <= vertices; ++v) {
      const auto d = static_cast<std::size_t>(m.dim(v));
      if (d == 0) continue;
      RationalMatrix phi(d, d);
      for (std::size_t k = 0; k < hom.basis.size(); ++k) {
        if (coeffs[k] != 0) phi += hom.basis[k][v - 1] * Rational(coeffs[k]);
      }
      if (determinant(std::move(phi)).is_zero()) return false;
    }
    return true;
  };

  // det(phi) over all vertices is a polynomial of total degree `degree` in
  // the coefficients, so it cannot vanish on the whole grid {0..degree}^h
  // unless it is identically zero.
  const std::size_t h = hom.dimension;
  double grid = 1.0;
  for (std::size_t k = 0; k < h; ++k) grid *= degree + 1;
  if (grid <= 200'000.0) {
    std::vector<std::int64_t> c(h, 0);
    while (true) {
      std::size_t k = 0;
      while (k < h && ++c[k] > degree) c[k++] = 0;
      if (k == h) return false;
      if (invertible(c)) return true;
    }
  }
  // Grid too large: fixed-seed random points, failure probability per point
  // at most degree / (2 * range + 1).
  std::mt19937_64 rng(0x51a7e5u);
  const std::int64_t range = 16LL * (degree + 1);
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  std::vector<std::int64_t> c(h);
  for (int trial = 0; trial < 4096; ++trial) {
    for (auto& x : c) x = dist(rng);
    if (invertible(c)) return true;
  }
  return false;
}

std::string canonical_encoding(const Representation& m) {
  std::string out;
  for (const auto& mat : m.matrices()) {
    out += '[';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      if (r > 0) out += ';';
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        if (c > 0) out += ',';
        out += mat(r, c).to_string();
      }
    }
    out += ']';
  }
  return out;
}

bool canonical_less(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return a.dims() < b.dims();
  return canonical_encoding(a) < canonical_encoding(b);
}

}  // namespace qlab
