#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quiverlab/module_enum.hpp"
#include "quiverlab/presets.hpp"

using namespace qlab;

namespace {

RationalMatrix mat(std::size_t r, std::size_t c, std::vector<int> values) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r * c; ++i) m(i / c, i % c) = values[i];
  return m;
}

std::set<DimVector> dims_of(const ModuleCatalog& c) {
  std::set<DimVector> out;
  for (const auto& m : c.modules) out.insert(m.dims());
  return out;
}

// 2x2 rational similarity: same characteristic polynomial, and either both
// or neither are scalar matrices.
bool similar_2x2(const RationalMatrix& a, const RationalMatrix& b) {
  auto trace = [](const RationalMatrix& m) { return m(0, 0) + m(1, 1); };
  auto det = [](const RationalMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); };
  auto scalar = [](const RationalMatrix& m) { return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1); };
  return trace(a) == trace(b) && det(a) == det(b) && scalar(a) == scalar(b);
}

}  // namespace

TEST(ThinCatalog, A2HasThreeModules) {
  const NamedQuiver q(2, {{"a", 1, 2}});
  const auto c = enumerate_thin_schurian(BoundQuiver(q));
  EXPECT_EQ(dims_of(c), (std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(c.complete_thin);
  EXPECT_FALSE(c.truncated);
  // Canonical order: by dimension vector.
  EXPECT_EQ(c.modules[0].dims(), (DimVector{0, 1}));
  EXPECT_EQ(c.modules[1].dims(), (DimVector{1, 0}));
  EXPECT_EQ(c.modules[2].dims(), (DimVector{1, 1}));
}

TEST(ThinCatalog, FourVertexAlgebraHasTwelveModules) {
  const auto bq = load_preset("example33").algebra();
  const auto c = enumerate_thin_schurian(bq);
  const std::set<DimVector> expected{{1, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 0},
                                     {1, 1, 0, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {1, 0, 0, 1},
                                     {0, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}, {1, 0, 1, 0}};
  EXPECT_EQ(c.size(), 12u);
  EXPECT_EQ(dims_of(c), expected);
  EXPECT_TRUE(c.complete_thin);
  for (const auto& m : c.modules) {
    EXPECT_TRUE(check_relations(m, bq).empty());
    EXPECT_TRUE(is_schurian(m, bq));
  }
  // The full-support module needs gamma = 0.
  const auto& full = c.modules.back();
  ASSERT_EQ(full.dims(), (DimVector{1, 1, 1, 1}));
  EXPECT_TRUE(full.matrix(bq.quiver().arrow_index("gamma")).is_zero());
}

// With an oriented 3-cycle and no relations, the thin full-support module
// has one chord scalar; every nonzero value gives a distinct module, so the
// exact solver must report the family through complete_thin.
TEST(ThinCatalog, CycleWithoutRelationsIsFlagged) {
  const NamedQuiver q(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
  const auto c = enumerate_thin_schurian(BoundQuiver(q));
  EXPECT_FALSE(c.complete_thin);
}

TEST(ThinCatalog, CycleWithZeroRelationsIsExact) {
  const NamedQuiver q(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
  std::vector<Relation> rels;
  for (auto names : {std::vector<std::string>{"a", "b"}, {"b", "c"}, {"c", "a"}}) {
    Relation r;
    r.terms.push_back({1, q.path_from_names(names)});
    rels.push_back(r);
  }
  const auto c = enumerate_thin_schurian(BoundQuiver(q, rels));
  EXPECT_TRUE(c.complete_thin);
  // Three simples and three length-two modules.
  EXPECT_EQ(c.size(), 6u);
}

TEST(GeneralCatalog, D4FindsTheModuleWithCentreTwo) {
  const NamedQuiver q(4, {{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}});
  const BoundQuiver bq(q);
  CatalogOptions options;
  options.max_entry = 2;
  const auto c = build_catalog(bq, options);
  // D4 has twelve indecomposables, all Schurian.
  EXPECT_EQ(c.size(), 12u);
  EXPECT_EQ(dims_of(c).count(DimVector{1, 1, 1, 2}), 1u);
  EXPECT_EQ(c.dim_bound, 2);
  EXPECT_FALSE(c.truncated);
}

TEST(GeneralCatalog, MaxEntryTwoAddsNothingToTheFourVertexAlgebra) {
  const auto bq = load_preset("example33").algebra();
  CatalogOptions options;
  options.max_entry = 2;
  const auto c = build_catalog(bq, options);
  EXPECT_EQ(c.size(), 12u);
  EXPECT_FALSE(c.truncated);
}

TEST(GeneralCatalog, BudgetSetsTruncated) {
  const NamedQuiver q(4, {{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}});
  const auto c = enumerate_schurian(BoundQuiver(q), 2, 3, 50);
  EXPECT_TRUE(c.truncated);
}

TEST(Isomorphism, KroneckerLinesAgreeWithProportionality) {
  const NamedQuiver q(2, {{"x", 1, 2}, {"y", 1, 2}});
  const BoundQuiver bq(q);
  const std::vector<std::pair<int, int>> points{{1, 0}, {0, 1}, {1, 1}, {2, 2}, {1, 2}, {-1, 1}, {2, -2}};
  for (auto [a, b] : points) {
    for (auto [c, d] : points) {
      const Representation m(q, {1, 1}, {mat(1, 1, {a}), mat(1, 1, {b})});
      const Representation n(q, {1, 1}, {mat(1, 1, {c}), mat(1, 1, {d})});
      EXPECT_EQ(are_isomorphic(m, n, bq), a * d == b * c) << a << ',' << b << " vs " << c << ',' << d;
    }
  }
}

TEST(Isomorphism, KroneckerPlanesAgreeWithSimilarity) {
  const NamedQuiver q(2, {{"x", 1, 2}, {"y", 1, 2}});
  const BoundQuiver bq(q);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-1, 2);
  std::vector<RationalMatrix> samples{mat(2, 2, {1, 0, 0, 1}), mat(2, 2, {1, 1, 0, 1}), mat(2, 2, {2, 0, 0, 0}),
                                      mat(2, 2, {0, 0, 0, 2})};
  for (int i = 0; i < 12; ++i) samples.push_back(mat(2, 2, {entry(rng), entry(rng), entry(rng), entry(rng)}));
  const auto id = RationalMatrix::identity(2);
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      const Representation m(q, {2, 2}, {id, a});
      const Representation n(q, {2, 2}, {id, b});
      EXPECT_EQ(are_isomorphic(m, n, bq), similar_2x2(a, b));
    }
  }
}

TEST(Canonical, EncodingSeparatesDistinctMatrices) {
  const NamedQuiver q(2, {{"a", 1, 2}});
  const Representation one(q, {1, 1}, {mat(1, 1, {1})});
  const Representation two(q, {1, 1}, {mat(1, 1, {2})});
  EXPECT_NE(canonical_encoding(one), canonical_encoding(two));
  EXPECT_TRUE(canonical_less(Representation::simple(q, 2), Representation::simple(q, 1)));
}
