#include "quiverlab/orthogonality.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "quiverlab/error.hpp"

namespace qlab {

HomMatrix::HomMatrix(std::vector<std::vector<std::size_t>> dims) : dims_(std::move(dims)) {
  for (const auto& row : dims_) {
    if (row.size() != dims_.size()) throw std::invalid_argument("hom matrix must be square");
  }
}

HomMatrix hom_matrix(const ModuleCatalog& catalog, unsigned threads) {
  const std::size_t n = catalog.size();
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n, 0));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      for (std::size_t j = 0; j < n; ++j) {
        dims[i][j] = hom_dimension(catalog.modules[i], catalog.modules[j], catalog.algebra);
      }
    }
  };
  if (threads <= 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(fill_rows, t, threads);
  }
  return HomMatrix(std::move(dims));
}

namespace {

void check_indices(std::span<const std::size_t> seq, const HomMatrix& hm) {
  for (auto idx : seq) {
    if (idx >= hm.size()) {
      throw Error(ErrorCode::UnknownModule, "module index " + std::to_string(idx) + " not in catalog");
    }
  }
}

/// Position p is valid iff Hom(seq[i], x) = 0 for i < p and Hom(x, seq[i]) = 0
/// for i >= p; returns the smallest valid p.
std::optional<std::size_t> insertion_point(std::span<const std::size_t> seq, std::size_t x,
                                           const HomMatrix& hm) {
  std::size_t upper = seq.size();  // largest p with a clean prefix
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!hm.vanish(seq[i], x)) {
      upper = i;
      break;
    }
  }
  std::size_t lower = 0;  // smallest p with a clean suffix
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (!hm.vanish(x, seq[i])) {
      lower = i + 1;
      break;
    }
  }
  if (lower <= upper) return lower;
  return std::nullopt;
}

}  // namespace

bool is_forward_orthogonal(std::span<const std::size_t> seq, const HomMatrix& hm) {
  check_indices(seq, hm);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!hm.vanish(seq[i], seq[j])) return false;
    }
  }
  return true;
}

MaximalityCheck is_maximal(std::span<const std::size_t> seq, const HomMatrix& hm) {
  check_indices(seq, hm);
  std::vector<bool> present(hm.size(), false);
  for (auto idx : seq) present[idx] = true;
  for (std::size_t x = 0; x < hm.size(); ++x) {
    if (present[x]) continue;
    if (auto p = insertion_point(seq, x, hm)) return {false, Insertion{x, *p}};
  }
  return {true, std::nullopt};
}

MfhoResult enumerate_mfho(const ModuleCatalog& catalog, const HomMatrix& hm, std::int64_t budget) {
  const std::size_t n = hm.size();
  MfhoResult result;
  ModuleSequence seq;
  std::vector<bool> present(n, false);

  // allowed[x]: x can be appended (no Hom from any earlier entry into x)
  auto dfs = [&](auto&& self, const std::vector<bool>& allowed) -> void {
    if (result.truncated) return;
    if (++result.nodes > budget) {
      result.truncated = true;
      return;
    }
    if (is_maximal(seq, hm).maximal) {
      MfhoSequence out;
      out.modules = seq;
      out.maximal = true;
      for (auto idx : seq) out.dim_vectors.push_back(catalog.modules[idx].dims());
      result.sequences.push_back(std::move(out));
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (present[x] || !allowed[x]) continue;
      std::vector<bool> next(n);
      for (std::size_t y = 0; y < n; ++y) next[y] = allowed[y] && hm.vanish(x, y);
      present[x] = true;
      seq.push_back(x);
      self(self, next);
      seq.pop_back();
      present[x] = false;
      if (result.truncated) return;
    }
  };
  dfs(dfs, std::vector<bool>(n, true));

  std::sort(result.sequences.begin(), result.sequences.end(),
            [](const MfhoSequence& a, const MfhoSequence& b) {
              if (a.modules.size() != b.modules.size()) return a.modules.size() < b.modules.size();
              return a.dim_vectors < b.dim_vectors;
            });
  return result;
}

PerpSets perp_sets(std::span<const std::size_t> modules, const HomMatrix& hm) {
  check_indices(modules, hm);
  PerpSets out;
  for (std::size_t x = 0; x < hm.size(); ++x) {
    bool in_f = true;
    for (auto m : modules) in_f = in_f && hm.vanish(m, x);
    if (in_f) out.f.push_back(x);
  }
  for (std::size_t y = 0; y < hm.size(); ++y) {
    bool in_g = true;
    for (auto x : out.f) in_g = in_g && hm.vanish(y, x);
    if (in_g) out.g.push_back(y);
  }
  return out;
}

CorrespondenceReport compare_sequence_sets(const MgsResult& mgs, const MfhoResult& mfho) {
  CorrespondenceReport report;
  report.inconclusive = mgs.truncated || mfho.truncated;
  std::set<VectorSequence> lhs;
  std::set<VectorSequence> rhs;
  for (const auto& s : mgs.sequences) lhs.insert(s.c_vectors);
  for (const auto& s : mfho.sequences) rhs.insert(s.dim_vectors);
  report.mgs_count = lhs.size();
  report.mfho_count = rhs.size();
  auto lengths = [](const std::set<VectorSequence>& set, int& lo, int& hi) {
    for (const auto& s : set) {
      const int len = static_cast<int>(s.size());
      lo = (lo == 0) ? len : std::min(lo, len);
      hi = std::max(hi, len);
    }
  };
  lengths(lhs, report.mgs_min_length, report.mgs_max_length);
  lengths(rhs, report.mfho_min_length, report.mfho_max_length);
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(report.only_in_mgs));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::back_inserter(report.only_in_mfho));
  report.equal = report.only_in_mgs.empty() && report.only_in_mfho.empty();
  return report;
}

CorrespondenceReport verify_igusa_correspondence(const BoundQuiver& bq, const ModuleCatalog& catalog,
                                        const VerifyBounds& bounds) {
  MgsOptions options;
  options.bounds = bounds.mgs;
  const MgsResult mgs = enumerate_mgs(bq.quiver().count_quiver(), options);
  const HomMatrix hm = hom_matrix(catalog);
  const MfhoResult mfho = enumerate_mfho(catalog, hm, bounds.mfho_budget);
  CorrespondenceReport report = compare_sequence_sets(mgs, mfho);
  report.inconclusive = report.inconclusive || catalog.truncated;
  return report;
}

std::vector<std::size_t> select_b_modules(const ModuleCatalog& catalog, const BSpec& spec) {
  std::vector<std::size_t> out;
  if (const auto* arrows = std::get_if<std::vector<std::string>>(&spec.selector)) {
    for (const auto& name : *arrows) {
      if (!catalog.algebra.quiver().find_arrow(name)) {
        throw Error(ErrorCode::InvalidBSpec,
                    "b_spec '" + spec.name + "' names unknown arrow '" + name + "'");
      }
    }
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (is_annihilated_by(catalog.modules[i], catalog.algebra, *arrows)) out.push_back(i);
    }
    return out;
  }
  const auto& vectors = std::get<std::vector<DimVector>>(spec.selector);
  for (const auto& v : vectors) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (catalog.modules[i].dims() == v) hits.push_back(i);
    }
    std::string text;
    for (auto x : v) text += (text.empty() ? "" : ",") + std::to_string(x);
    if (hits.empty()) {
      throw Error(ErrorCode::InvalidBSpec,
                  "b_spec '" + spec.name + "': no catalog module has dimension vector (" + text + ")");
    }
    if (hits.size() > 1) {
      throw Error(ErrorCode::InvalidBSpec,
                  "b_spec '" + spec.name + "': dimension vector (" + text + ") is ambiguous");
    }
    if (std::find(out.begin(), out.end(), hits.front()) == out.end()) out.push_back(hits.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_theorem(const ModuleCatalog& catalog, const HomMatrix& hm,
                                  const BSpec& spec, std::span<const GreenSequence> mgs) {
  VerificationReport report;
  report.b_name = spec.name;
  report.b_modules = select_b_modules(catalog, spec);
  const auto& b = report.b_modules;

  // Place a module once every module it maps to is placed; smallest catalog
  // index first among the ready ones.
  std::vector<bool> placed(b.size(), false);
  for (std::size_t round = 0; round < b.size(); ++round) {
    std::optional<std::size_t> next;
    for (std::size_t k = 0; k < b.size() && !next; ++k) {
      if (placed[k]) continue;
      bool ready = true;
      for (std::size_t t = 0; t < b.size(); ++t) {
        if (t != k && !placed[t] && !hm.vanish(b[k], b[t])) ready = false;
      }
      if (ready) next = k;
    }
    if (!next) {
      report.discrepancies.push_back("nonzero homomorphisms among the B-modules form a cycle");
      break;
    }
    placed[*next] = true;
    report.ordering.push_back(b[*next]);
  }
  for (auto idx : report.ordering) report.dim_vectors.push_back(catalog.modules[idx].dims());

  if (report.ordering.size() == b.size()) {
    report.forward_orthogonal = is_forward_orthogonal(report.ordering, hm);
    if (!report.forward_orthogonal) report.discrepancies.push_back("ordering is not forward hom-orthogonal");
    report.maximality = is_maximal(report.ordering, hm);
    if (!report.maximality.maximal) {
      const auto& cert = *report.maximality.certificate;
      std::string text;
      for (auto x : catalog.modules[cert.module].dims()) text += (text.empty() ? "" : ",") + std::to_string(x);
      report.discrepancies.push_back("module (" + text + ") can be inserted at position " +
                                     std::to_string(cert.position));
    }
    for (std::size_t k = 0; k < mgs.size(); ++k) {
      if (mgs[k].c_vectors == report.dim_vectors) {
        report.matched_mgs = k;
        break;
      }
    }
    if (!report.matched_mgs) {
      report.discrepancies.push_back("dimension vectors are not the c-vectors of any enumerated MGS");
    }
  }
  report.holds = report.discrepancies.empty();
  return report;
}

ConjectureReport conjecture_report(const ModuleCatalog& catalog, std::span<const BSpec> specs,
                                   const MgsResult& mgs) {
  ConjectureReport report;
  for (const auto& s : mgs.sequences) report.longest_mgs = std::max(report.longest_mgs, s.length());
  for (const auto& spec : specs) {
    ConjectureEntry entry{spec.name, select_b_modules(catalog, spec).size()};
    if (static_cast<int>(entry.b_module_count) == report.longest_mgs) report.some_spec_attains_longest = true;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace qlab
