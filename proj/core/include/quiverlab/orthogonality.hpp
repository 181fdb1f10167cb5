#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quiverlab/green_search.hpp"
#include "quiverlab/module_enum.hpp"

namespace qlab {

/// Pairwise Hom dimensions over a catalog; vanish(i, j) <=> Hom(M_i, M_j) = 0.
class HomMatrix {
 public:
  HomMatrix() = default;
  explicit HomMatrix(std::vector<std::vector<std::size_t>> dims);

  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t dimension(std::size_t i, std::size_t j) const { return dims_.at(i).at(j); }
  bool vanish(std::size_t i, std::size_t j) const { return dims_[i][j] == 0; }

 private:
  std::vector<std::vector<std::size_t>> dims_;
};

/// Fills every ordered pair, spreading rows over `threads` workers
/// (0 = hardware concurrency).
HomMatrix hom_matrix(const ModuleCatalog& catalog, unsigned threads = 0);

/// Catalog indices in sequence order.
using ModuleSequence = std::vector<std::size_t>;

/// Error(UnknownModule) if an index is outside the catalog.
bool is_forward_orthogonal(std::span<const std::size_t> seq, const HomMatrix& hm);

struct Insertion {
  std::size_t module = 0;
  /// Number of sequence entries preceding the inserted module.
  std::size_t position = 0;

  friend bool operator==(const Insertion&, const Insertion&) = default;
};

struct MaximalityCheck {
  bool maximal = false;
  std::optional<Insertion> certificate;
};

/// Insertion-maximality against every catalog module not already present.
MaximalityCheck is_maximal(std::span<const std::size_t> seq, const HomMatrix& hm);

struct MfhoSequence {
  ModuleSequence modules;
  std::vector<DimVector> dim_vectors;
  bool maximal = false;
};

struct MfhoResult {
  std::vector<MfhoSequence> sequences;
  bool truncated = false;
  std::int64_t nodes = 0;
};

/// Every insertion-maximal forward hom-orthogonal sequence, sorted by length
/// then by dimension-vector sequence.
MfhoResult enumerate_mfho(const ModuleCatalog& catalog, const HomMatrix& hm,
                          std::int64_t budget = 50'000'000);

struct PerpSets {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;
};

/// F = {X : Hom(M_i, X) = 0 for all i}, G = {Y : Hom(Y, X) = 0 for all X in F}.
PerpSets perp_sets(std::span<const std::size_t> modules, const HomMatrix& hm);

using VectorSequence = std::vector<IntVector>;

struct CorrespondenceReport {
  bool equal = false;
  bool inconclusive = false;
  std::size_t mgs_count = 0;
  std::size_t mfho_count = 0;
  int mgs_max_length = 0;
  int mfho_max_length = 0;
  int mgs_min_length = 0;
  int mfho_min_length = 0;
  std::vector<VectorSequence> only_in_mgs;
  std::vector<VectorSequence> only_in_mfho;
};

/// Compares MGS c-vector sequences with MFHO dimension-vector sequences as
/// sets of ordered tuples.
CorrespondenceReport compare_sequence_sets(const MgsResult& mgs, const MfhoResult& mfho);

struct VerifyBounds {
  SearchBounds mgs;
  std::int64_t mfho_budget = 50'000'000;
};

CorrespondenceReport verify_igusa_correspondence(const BoundQuiver& bq, const ModuleCatalog& catalog,
                                        const VerifyBounds& bounds = {});

/// Designates the B-modules: either the modules killing these arrows, or the
/// catalog modules with exactly these dimension vectors.
struct BSpec {
  std::string name;
  std::variant<std::vector<std::string>, std::vector<DimVector>> selector;
};

struct VerificationReport {
  std::string b_name;
  bool holds = false;
  std::vector<std::size_t> b_modules;
  ModuleSequence ordering;
  std::vector<DimVector> dim_vectors;
  bool forward_orthogonal = false;
  MaximalityCheck maximality;
  /// Index into the MGS list whose c-vectors equal dim_vectors.
  std::optional<std::size_t> matched_mgs;
  std::vector<std::string> discrepancies;
};

/// Error(InvalidBSpec) for unknown arrows or dimension vectors that match no
/// (or more than one) catalog module.
std::vector<std::size_t> select_b_modules(const ModuleCatalog& catalog, const BSpec& spec);

/// B-modules ordered so that every nonzero Hom points from a later module to
/// an earlier one, then checked for forward orthogonality, maximality over
/// the whole catalog and agreement with some MGS.
VerificationReport verify_theorem(const ModuleCatalog& catalog, const HomMatrix& hm,
                                  const BSpec& spec, std::span<const GreenSequence> mgs);

struct ConjectureEntry {
  std::string b_name;
  std::size_t b_module_count = 0;
};

/// Exploratory comparison of the longest MGS length with B-module counts.
/// Reports, never verifies.
struct ConjectureReport {
  int longest_mgs = 0;
  std::vector<ConjectureEntry> entries;
  bool some_spec_attains_longest = false;
};

ConjectureReport conjecture_report(const ModuleCatalog& catalog, std::span<const BSpec> specs,
                                   const MgsResult& mgs);

}  // namespace qlab
