#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiverlab/representation.hpp"

namespace qlab {

/// Pairwise non-isomorphic Schurian modules of one algebra, in canonical
/// order (dimension vector, then matrix encoding). Maximality claims made
/// downstream are relative to this list and its flags.
struct ModuleCatalog {
  BoundQuiver algebra;
  std::vector<Representation> modules;
  /// Largest dimension-vector entry searched.
  int dim_bound = 1;
  /// Field sampled by the general search; 0 if only the thin search ran.
  int field_size = 0;
  /// Every thin Schurian module is present up to isomorphism.
  bool complete_thin = false;
  /// A search budget was exhausted.
  bool truncated = false;

  std::size_t size() const noexcept { return modules.size(); }
};

struct CatalogOptions {
  int max_entry = 2;
  int field_size = 3;
  std::int64_t budget = 200'000'000;
};

/// Every thin Schurian module up to isomorphism. Arrow scalars are fixed to
/// 1 on a spanning tree of the nonzero arrows; the remaining (chord) scalars
/// are solved exactly from the relations.
ModuleCatalog enumerate_thin_schurian(const BoundQuiver& bq);

/// Brute force over dimension vectors with entries <= max_entry and arrow
/// matrices with entries in {0..field_size-1}, lifted to the rationals.
/// Arrows of a vertex-disjoint matching are restricted to rank normal forms.
/// Exhaustive over that sample only; not a completeness proof beyond thin.
ModuleCatalog enumerate_schurian(const BoundQuiver& bq, int max_entry, int field_size,
                                 std::int64_t budget = CatalogOptions{}.budget);

/// Thin catalog, extended by the sampled search when max_entry > 1.
ModuleCatalog build_catalog(const BoundQuiver& bq, const CatalogOptions& options);

/// Searches Hom(m, n) for an intertwiner invertible at every vertex.
bool are_isomorphic(const Representation& m, const Representation& n, const BoundQuiver& bq);

std::string canonical_encoding(const Representation& m);
bool canonical_less(const Representation& a, const Representation& b);

}  // namespace qlab
