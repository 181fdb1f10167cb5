// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quiverlab/orthogonality.hpp"
#include "quiverlab/presets.hpp"
#include "quiverlab/representation.hpp"

using namespace qlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool sign_coherent(const IceQuiver& iq) {
  const auto c = c_matrix(iq);
  for (int v = 1; v <= c.size(); ++v) {
    bool pos = false;
    bool neg = false;
    for (int x : c.row(v)) {
      pos = pos || x > 0;
      neg = neg || x < 0;
    }
    if (pos == neg) return false;
  }
  return true;
}

bool negated_permutation(const CMatrix& c) {
  std::vector<int> hits(static_cast<std::size_t>(c.size()), 0);
  for (int v = 1; v <= c.size(); ++v) {
    int nonzero = 0;
    for (std::size_t j = 0; j < hits.size(); ++j) {
      const int x = c.row(v)[j];
      if (x == 0) continue;
      if (x != -1) return false;
      ++nonzero;
      ++hits[j];
    }
    if (nonzero != 1) return false;
  }
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

std::set<VectorSequence> c_vector_set(const MgsResult& r) {
  std::set<VectorSequence> out;
  for (const auto& s : r.sequences) out.insert(s.c_vectors);
  return out;
}

std::set<VectorSequence> dim_vector_set(const MfhoResult& r) {
  std::set<VectorSequence> out;
  for (const auto& s : r.sequences) out.insert(s.dim_vectors);
  return out;
}

// Independent count of thin Schurian modules. For a thin representation the
// endomorphisms are the vertex scalars that agree across every nonzero
// arrow, so it is Schurian iff its nonzero arrows connect the support. Arrow
// scalars range over {-2..2}; classes are keyed by support and nonzero
// pattern, which separates the modules of an algebra whose relations fix
// every cycle scalar.
std::set<std::pair<DimVector, std::vector<bool>>> thin_schurian_oracle(const BoundQuiver& bq) {
  const auto& q = bq.quiver();
  const int n = q.vertex_count();
  const std::size_t arrows = q.arrow_count();
  std::set<std::pair<DimVector, std::vector<bool>>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    DimVector dims(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dims[static_cast<std::size_t>(v)] = (mask >> v) & 1;
    std::vector<std::size_t> live;
    for (std::size_t a = 0; a < arrows; ++a) {
      if (dims[static_cast<std::size_t>(q.arrow(a).source - 1)] && dims[static_cast<std::size_t>(q.arrow(a).target - 1)]) {
        live.push_back(a);
      }
    }
    std::vector<int> scalar(arrows, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k < live.size()) {
        for (int s = -2; s <= 2; ++s) {
          scalar[live[k]] = s;
          rec(k + 1);
        }
        scalar[live[k]] = 0;
        return;
      }
      for (const auto& rel : bq.relations()) {
        const int src = q.path_source(rel.terms.front().path);
        const int dst = q.path_target(rel.terms.front().path);
        if (!dims[static_cast<std::size_t>(src - 1)] || !dims[static_cast<std::size_t>(dst - 1)]) continue;
        Rational total;
        for (const auto& t : rel.terms) {
          Rational prod = t.coeff;
          for (auto a : t.path) {
            const auto& arrow = q.arrow(a);
            if (!dims[static_cast<std::size_t>(arrow.source - 1)] || !dims[static_cast<std::size_t>(arrow.target - 1)]) {
              prod = 0;
              break;
            }
            prod *= scalar[a];
          }
          total += prod;
        }
        if (!total.is_zero()) return;
      }
      // Connectivity of the support through nonzero arrows.
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = v;
      std::function<int(int)> root = [&](int v) {
        return comp[static_cast<std::size_t>(v)] == v ? v : root(comp[static_cast<std::size_t>(v)]);
      };
      for (auto a : live) {
        if (scalar[a] != 0) comp[static_cast<std::size_t>(root(q.arrow(a).source - 1))] = root(q.arrow(a).target - 1);
      }
      std::set<int> roots;
      for (int v = 0; v < n; ++v) {
        if (dims[static_cast<std::size_t>(v)]) roots.insert(root(v));
      }
      if (roots.size() != 1) return;
      std::vector<bool> pattern(arrows);
      for (std::size_t a = 0; a < arrows; ++a) pattern[a] = scalar[a] != 0;
      out.insert({dims, pattern});
    };
    rec(0);
  }
  return out;
}

Outcome involution() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(1, 6);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    const auto q = oracle::random_cluster(rng, n, 2);
    const IceQuiver iq(q, {});
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    if (mutate(mutate(iq, k), k) != iq) ++failures;
    const auto framed = make_framed(q);
    if (mutate(mutate(framed, k), k) != framed) ++failures;
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 5.0,
          "1000 trials, " + std::to_string(failures) + " failures, " + std::to_string(t) + " s (limit 5 s)"};
}

Outcome sign_coherence() {
  std::int64_t states = 0;
  std::int64_t violations = 0;
  for (const char* name : {"a3", "example33"}) {
    MgsOptions options;
    options.on_state = [&](const IceQuiver& iq) {
      ++states;
      if (!sign_coherent(iq)) ++violations;
    };
    const auto r = enumerate_mgs(load_preset(name).quiver.count_quiver(), options);
    if (r.truncated) return {false, std::string(name) + " search truncated"};
  }
  return {violations == 0, std::to_string(states) + " states checked, " + std::to_string(violations) + " violations"};
}

Outcome a2_oracle() {
  const auto start = Clock::now();
  const auto problem = load_preset("a2");
  const auto bq = problem.algebra();
  const auto mgs = enumerate_mgs(problem.quiver.count_quiver());
  const auto catalog = enumerate_thin_schurian(bq);
  const auto hm = hom_matrix(catalog, 1);
  const auto mfho = enumerate_mfho(catalog, hm);
  const double t = seconds_since(start);
  const std::set<VectorSequence> expected{{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}, {1, 0}}};
  std::set<std::size_t> lengths;
  for (const auto& s : mgs.sequences) lengths.insert(s.vertices.size());
  const bool ok = mgs.sequences.size() == 2 && lengths == std::set<std::size_t>{2, 3} &&
                  c_vector_set(mgs) == expected && mfho.sequences.size() == 2 && dim_vector_set(mfho) == expected &&
                  !mgs.truncated && !mfho.truncated && t < 1.0;
  return {ok, std::to_string(mgs.sequences.size()) + " MGS, " + std::to_string(mfho.sequences.size()) +
                  " forward hom-orthogonal sequences, " + std::to_string(t) + " s (limit 1 s)"};
}

Outcome spectrum_example() {
  const auto start = Clock::now();
  SearchBounds bounds;
  bounds.max_len = 12;
  const auto s = mgs_spectrum(load_preset("example33").quiver.count_quiver(), bounds);
  const double t = seconds_since(start);
  return {s.min_length == 5 && s.max_length == 11 && !s.truncated && t < 600.0,
          "p=" + std::to_string(s.min_length) + " m=" + std::to_string(s.max_length) + " over " +
              std::to_string(s.count) + " sequences" + (s.truncated ? " (truncated)" : "") + ", " +
              std::to_string(t) + " s"};
}

Outcome catalog_example() {
  const auto bq = load_preset("example33").algebra();
  const auto thin = enumerate_thin_schurian(bq);
  CatalogOptions options;
  options.max_entry = 2;
  const auto wide = build_catalog(bq, options);
  const auto reference = thin_schurian_oracle(bq);
  bool pairwise_distinct = true;
  for (std::size_t i = 0; i < thin.size(); ++i) {
    for (std::size_t j = i + 1; j < thin.size(); ++j) {
      if (are_isomorphic(thin.modules[i], thin.modules[j], bq)) pairwise_distinct = false;
    }
  }
  const bool ok = thin.size() == 12 && reference.size() == 12 && thin.complete_thin && pairwise_distinct &&
                  wide.size() == 12 && !wide.truncated;
  return {ok, "thin " + std::to_string(thin.size()) + " (oracle " + std::to_string(reference.size()) +
                  "), entries <= 2: " + std::to_string(wide.size()) + (wide.truncated ? " (truncated)" : "")};
}

Outcome correspondence() {
  std::string detail;
  bool ok = true;
  for (const char* name : {"a2", "a3", "example33"}) {
    const auto bq = load_preset(name).algebra();
    const auto catalog = enumerate_thin_schurian(bq);
    const auto report = verify_igusa_correspondence(bq, catalog);
    const bool equal = report.equal && !report.inconclusive;
    ok = ok && equal;
    detail += std::string(detail.empty() ? "" : ", ") + name + ": " + std::to_string(report.mgs_count) + "/" +
              std::to_string(report.mfho_count) + (equal ? " equal" : " DIFFER");
  }
  return {ok, detail};
}

Outcome theorem_pipeline() {
  const auto problem = load_preset("example33");
  const auto bq = problem.algebra();
  const auto catalog = enumerate_thin_schurian(bq);
  const auto hm = hom_matrix(catalog);
  const auto mgs = enumerate_mgs(problem.quiver.count_quiver());
  const auto spectrum = spectrum_of(mgs);
  const auto bp = verify_theorem(catalog, hm, *problem.find_b_spec("Bprime"), mgs.sequences);
  const auto b = verify_theorem(catalog, hm, *problem.find_b_spec("B"), mgs.sequences);
  const bool bp_ok = bp.holds && bp.dim_vectors.size() == 11 && bp.matched_mgs &&
                     mgs.sequences[*bp.matched_mgs].length() == spectrum.max_length;
  const bool b_ok = b.holds && b.dim_vectors.size() == 8 && b.matched_mgs.has_value();
  return {bp_ok && b_ok && b.dim_vectors.size() < bp.dim_vectors.size(),
          "Bprime length " + std::to_string(bp.dim_vectors.size()) + (bp_ok ? " holds" : " FAILS") +
              ", B length " + std::to_string(b.dim_vectors.size()) + (b_ok ? " holds" : " FAILS") +
              ", longest MGS " + std::to_string(spectrum.max_length)};
}

Outcome hom_table() {
  const auto bq = load_preset("a2").algebra();
  const auto& q = bq.quiver();
  RationalMatrix one(1, 1);
  one(0, 0) = 1;
  const auto s1 = Representation::simple(q, 1);
  const auto s2 = Representation::simple(q, 2);
  const Representation x(q, {1, 1}, {one});
  struct Row {
    const char* name;
    const Representation* m;
    const Representation* n;
    std::size_t expected;
  };
  const Row rows[] = {{"S1->X", &s1, &x, 1}, {"X->S1", &x, &s1, 0}, {"X->S2", &x, &s2, 1},
                      {"S2->X", &s2, &x, 0}, {"S1->S2", &s1, &s2, 0}, {"S2->S1", &s2, &s1, 0}};
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    const auto d = hom_space(*r.m, *r.n, bq).dimension;
    ok = ok && d == r.expected && hom_dimension(*r.m, *r.n, bq) == r.expected;
    detail += std::string(detail.empty() ? "" : " ") + r.name + "=" + std::to_string(d);
  }
  return {ok, detail};
}

Outcome derivatives() {
  const auto problem = load_preset("example33");
  if (!problem.potential || !problem.relations) return {false, "preset lacks potential or relations"};
  const auto d = cyclic_derivatives(problem.quiver, *problem.potential);
  const bool ok = d.size() == problem.relations->size() && generators_match_up_to_scalar(d, *problem.relations);
  return {ok, std::to_string(d.size()) + " derivatives vs " + std::to_string(problem.relations->size()) +
                  " printed generators"};
}

Outcome terminal_form() {
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (const auto& name : list_presets()) {
    const auto q = load_preset(name).quiver.count_quiver();
    const auto r = enumerate_mgs(q);
    if (r.truncated) return {false, name + " search truncated"};
    for (const auto& s : r.sequences) {
      ++checked;
      if (!negated_permutation(c_matrix(replay(q, s.vertices).state))) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " sequences, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "mutation involution", involution},
      {2, "sign coherence along full searches", sign_coherence},
      {3, "A2 exhaustive oracle", a2_oracle},
      {4, "four-vertex algebra MGS spectrum", spectrum_example},
      {5, "four-vertex algebra module catalog", catalog_example},
      {6, "MGS / forward hom-orthogonal correspondence", correspondence},
      {7, "B-module ordering pipeline", theorem_pipeline},
      {8, "A2 hom dimensions", hom_table},
      {9, "cyclic derivatives generate the ideal", derivatives},
      {10, "terminal c-matrices are negated permutations", terminal_form},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %2d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
