#include "quiverlab/report.hpp"

#include <sstream>

#include "quiverlab/error.hpp"

namespace qlab::report {
namespace {

std::string vectors_text(const std::vector<IntVector>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ' ';
    out += vector_text(vs[i]);
  }
  return out;
}

std::string list_text(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void matrix_rows(std::ostringstream& os, const IntMatrix& m, const std::vector<int>& labels) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  " << labels[r] << ": [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c > 0 ? " " : "") << m(r, c);
    os << "]\n";
  }
}

}  // namespace

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string state_text(const SearchState& s) {
  std::ostringstream os;
  os << "mutations: " << list_text(s.history) << "\n";
  os << "arrows:";
  for (const auto& a : s.state.quiver().arrow_list()) {
    os << ' ' << a.source << "->" << a.target;
    if (a.count > 1) os << 'x' << a.count;
  }
  os << "\nexchange matrix:\n";
  const auto e = exchange_matrix(s.state);
  matrix_rows(os, e.entries, e.row_vertices);
  os << "c-matrix:\n";
  std::vector<int> rows;
  for (int v = 1; v <= s.mutable_count(); ++v) rows.push_back(v);
  matrix_rows(os, c_matrix(s.state).entries, rows);
  os << "colors:";
  for (int v : rows) {
    os << ' ' << v << '=';
    try {
      os << to_string(vertex_color(s.state, v));
    } catch (const Error&) {
      os << "incoherent";
    }
  }
  os << "\n";
  if (!s.trace.empty()) os << "c-vectors: " << vectors_text(s.trace) << "\n";
  if (s.all_red()) os << "all vertices red\n";
  return os.str();
}

std::string mgs_text(const MgsResult& r) {
  std::ostringstream os;
  os << "maximal green sequences: " << r.sequences.size();
  if (r.truncated) os << " (TRUNCATED: search bound reached, list may be incomplete)";
  os << "\n";
  for (std::size_t i = 0; i < r.sequences.size(); ++i) {
    const auto& s = r.sequences[i];
    os << '#' << i + 1 << " length=" << s.length() << " vertices=" << list_text(s.vertices)
       << " c-vectors=" << vectors_text(s.c_vectors) << "\n";
  }
  return os.str();
}

std::string spectrum_text(const SpectrumReport& s) {
  std::ostringstream os;
  os << "count=" << s.count << " p=" << s.min_length << " m=" << s.max_length << "\n";
  os << "lengths:";
  for (const auto& [len, count] : s.length_counts) os << ' ' << len << ':' << count;
  os << "\n";
  if (s.truncated) os << "TRUNCATED: search bound reached, spectrum may be incomplete\n";
  return os.str();
}

std::string catalog_text(const ModuleCatalog& c) {
  std::ostringstream os;
  os << "Schurian modules: " << c.size() << " (entries <= " << c.dim_bound;
  if (c.field_size > 0) os << ", coefficients sampled from 0.." << c.field_size - 1;
  os << ")\n";
  os << "thin catalog complete: " << (c.complete_thin ? "yes" : "no") << "\n";
  if (c.truncated) os << "TRUNCATED: search budget exhausted\n";
  const auto& quiver = c.algebra.quiver();
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    const auto& m = c.modules[i];
    os << '#' << i + 1 << ' ' << vector_text(m.dims());
    for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
      const auto& mat = m.matrix(ai);
      if (mat.rows() == 0 || mat.cols() == 0) continue;
      os << ' ' << quiver.arrow(ai).name << "=[";
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        if (r > 0) os << ';';
        for (std::size_t k = 0; k < mat.cols(); ++k) os << (k > 0 ? "," : "") << mat(r, k).to_string();
      }
      os << ']';
    }
    os << "\n";
  }
  return os.str();
}

std::string mfho_text(const MfhoResult& r) {
  std::ostringstream os;
  os << "maximal forward hom-orthogonal sequences: " << r.sequences.size();
  if (r.truncated) os << " (TRUNCATED: node budget reached)";
  os << "\n";
  for (std::size_t i = 0; i < r.sequences.size(); ++i) {
    const auto& s = r.sequences[i];
    os << '#' << i + 1 << " length=" << s.modules.size() << ' ' << vectors_text(s.dim_vectors) << "\n";
  }
  return os.str();
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "B-spec " << r.b_name << ": " << r.b_modules.size() << " modules\n";
  os << "  order: " << vectors_text(r.dim_vectors) << "\n";
  os << "  forward hom-orthogonal: " << (r.forward_orthogonal ? "yes" : "no") << "\n";
  os << "  maximal in catalog: " << (r.maximality.maximal ? "yes" : "no");
  if (r.maximality.certificate) {
    os << " (module #" << r.maximality.certificate->module + 1 << " fits at position "
       << r.maximality.certificate->position << ")";
  }
  os << "\n";
  if (r.holds) {
    os << "THEOREM HOLDS: length " << r.dim_vectors.size() << ", matches MGS #" << *r.matched_mgs + 1 << "\n";
  } else {
    os << "THEOREM FAILS: length " << r.dim_vectors.size() << "\n";
    for (const auto& d : r.discrepancies) os << "  - " << d << "\n";
  }
  return os.str();
}

std::string correspondence_text(const CorrespondenceReport& r) {
  std::ostringstream os;
  if (r.inconclusive) {
    os << "CORRESPONDENCE INCONCLUSIVE";
  } else {
    os << (r.equal ? "CORRESPONDENCE HOLDS" : "CORRESPONDENCE FAILS");
  }
  os << ": " << r.mgs_count << " maximal green sequences (lengths " << r.mgs_min_length << ".."
     << r.mgs_max_length << "), " << r.mfho_count << " forward hom-orthogonal sequences (lengths "
     << r.mfho_min_length << ".." << r.mfho_max_length << ")\n";
  for (const auto& s : r.only_in_mgs) os << "  only as MGS: " << vectors_text(s) << "\n";
  for (const auto& s : r.only_in_mfho) os << "  only as MFHO: " << vectors_text(s) << "\n";
  return os.str();
}

std::string conjecture_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "exploratory, non-verifying: longest maximal green sequence has length " << r.longest_mgs << "\n";
  for (const auto& e : r.entries) {
    os << "  " << e.b_name << ": " << e.b_module_count << " B-modules"
       << (static_cast<int>(e.b_module_count) == r.longest_mgs ? " (attains longest)" : "") << "\n";
  }
  return os.str();
}

}  // namespace qlab::report
