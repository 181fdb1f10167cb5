#include "quiverlab/serialize.hpp"

#include "quiverlab/error.hpp"

namespace qlab::json_io {
namespace {

json vectors(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

json int_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json rational_matrix(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json path_terms(const std::vector<PathTerm>& terms, const NamedQuiver& quiver, const char* key) {
  json out = json::array();
  for (const auto& t : terms) {
    json names = json::array();
    for (auto ai : t.path) names.push_back(quiver.arrow(ai).name);
    out.push_back({{"coeff", t.coeff.to_string()}, {key, std::move(names)}});
  }
  return out;
}

}  // namespace

json ice_quiver(const IceQuiver& iq) {
  json arrows = json::array();
  for (const auto& a : iq.quiver().arrow_list()) {
    arrows.push_back({{"from", a.source}, {"to", a.target}, {"count", a.count}});
  }
  return {{"vertices", iq.vertex_count()}, {"frozen", iq.frozen_vertices()}, {"arrows", std::move(arrows)}};
}

json exchange_matrix(const ExchangeMatrix& e) {
  return {{"rows", e.row_vertices}, {"entries", int_matrix(e.entries)}};
}

json c_matrix(const CMatrix& c) { return int_matrix(c.entries); }

json search_state(const SearchState& s) {
  const int n = s.mutable_count();
  json colors = json::object();
  for (int v = 1; v <= n; ++v) {
    try {
      colors[std::to_string(v)] = to_string(vertex_color(s.state, v));
    } catch (const Error&) {
      colors[std::to_string(v)] = "incoherent";
    }
  }
  return {{"quiver", ice_quiver(s.state)},
          {"colors", std::move(colors)},
          {"exchange_matrix", exchange_matrix(qlab::exchange_matrix(s.state))},
          {"c_matrix", c_matrix(qlab::c_matrix(s.state))},
          {"history", s.history},
          {"trace", vectors(s.trace)},
          {"all_red", s.all_red()}};
}

json green_sequence(const GreenSequence& s) {
  return {{"vertices", s.vertices},
          {"c_vectors", vectors(s.c_vectors)},
          {"length", s.length()},
          {"maximal", s.maximal}};
}

GreenSequence green_sequence_from(const json& j) {
  GreenSequence s;
  s.vertices = j.at("vertices").get<std::vector<int>>();
  s.c_vectors = j.at("c_vectors").get<std::vector<IntVector>>();
  s.maximal = j.at("maximal").get<bool>();
  if (j.at("length").get<int>() != s.length() || s.c_vectors.size() != s.vertices.size()) {
    throw Error(ErrorCode::SemanticError, "green sequence length does not match its vertices");
  }
  return s;
}

json mgs_result(const MgsResult& r) {
  json seqs = json::array();
  for (const auto& s : r.sequences) seqs.push_back(green_sequence(s));
  json out = {{"schema", "quiverlab.mgs"},
              {"schema_version", kSchemaVersion},
              {"count", r.sequences.size()},
              {"truncated", r.truncated},
              {"states_visited", r.states_visited},
              {"sequences", std::move(seqs)}};
  if (r.distinct_states) out["distinct_states"] = *r.distinct_states;
  return out;
}

MgsResult mgs_result_from(const json& j) {
  if (j.at("schema") != "quiverlab.mgs") throw Error(ErrorCode::SemanticError, "not an mgs document");
  MgsResult r;
  r.truncated = j.at("truncated").get<bool>();
  r.states_visited = j.at("states_visited").get<std::int64_t>();
  for (const auto& s : j.at("sequences")) r.sequences.push_back(green_sequence_from(s));
  if (j.contains("distinct_states")) r.distinct_states = j["distinct_states"].get<std::size_t>();
  return r;
}

json spectrum(const SpectrumReport& s) {
  json lengths = json::object();
  for (const auto& [len, count] : s.length_counts) lengths[std::to_string(len)] = count;
  return {{"schema", "quiverlab.spectrum"},
          {"schema_version", kSchemaVersion},
          {"count", s.count},
          {"p", s.min_length},
          {"m", s.max_length},
          {"lengths", std::move(lengths)},
          {"truncated", s.truncated}};
}

json representation(const Representation& m, const NamedQuiver& quiver) {
  json arrows = json::object();
  for (std::size_t ai = 0; ai < quiver.arrow_count(); ++ai) {
    arrows[quiver.arrow(ai).name] = rational_matrix(m.matrix(ai));
  }
  return {{"dims", m.dims()}, {"arrows", std::move(arrows)}};
}

Representation representation_from(const json& j, const NamedQuiver& quiver) {
  DimVector dims = j.at("dims").get<DimVector>();
  std::vector<RationalMatrix> mats;
  for (const auto& a : quiver.arrows()) {
    const auto& rows = j.at("arrows").at(a.name);
    const auto r = static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.source - 1)));
    const auto c = static_cast<std::size_t>(dims.at(static_cast<std::size_t>(a.target - 1)));
    RationalMatrix m(r, c);
    if (rows.size() != r) throw Error(ErrorCode::ShapeError, "matrix of '" + a.name + "' has wrong row count");
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::ShapeError, "matrix of '" + a.name + "' has wrong column count");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = Rational::parse(rows[i][k].get<std::string>());
    }
    mats.push_back(std::move(m));
  }
  return Representation(quiver, std::move(dims), std::move(mats));
}

json catalog(const ModuleCatalog& c) {
  json modules = json::array();
  for (const auto& m : c.modules) modules.push_back(representation(m, c.algebra.quiver()));
  return {{"schema", "quiverlab.catalog"},
          {"schema_version", kSchemaVersion},
          {"count", c.size()},
          {"dim_bound", c.dim_bound},
          {"field_size", c.field_size},
          {"complete_thin", c.complete_thin},
          {"truncated", c.truncated},
          {"modules", std::move(modules)}};
}

ModuleCatalog catalog_from(const json& j, const BoundQuiver& algebra) {
  if (j.at("schema") != "quiverlab.catalog") throw Error(ErrorCode::SemanticError, "not a catalog document");
  ModuleCatalog c;
  c.algebra = algebra;
  c.dim_bound = j.at("dim_bound").get<int>();
  c.field_size = j.at("field_size").get<int>();
  c.complete_thin = j.at("complete_thin").get<bool>();
  c.truncated = j.at("truncated").get<bool>();
  for (const auto& m : j.at("modules")) c.modules.push_back(representation_from(m, algebra.quiver()));
  return c;
}

json mfho_result(const MfhoResult& r) {
  json seqs = json::array();
  for (const auto& s : r.sequences) {
    seqs.push_back({{"modules", s.modules},
                    {"dim_vectors", vectors(s.dim_vectors)},
                    {"length", s.modules.size()},
                    {"maximal", s.maximal}});
  }
  return {{"schema", "quiverlab.mfho"},
          {"schema_version", kSchemaVersion},
          {"count", r.sequences.size()},
          {"truncated", r.truncated},
          {"sequences", std::move(seqs)}};
}

json correspondence_report(const CorrespondenceReport& r) {
  json only_mgs = json::array();
  for (const auto& s : r.only_in_mgs) only_mgs.push_back(vectors(s));
  json only_mfho = json::array();
  for (const auto& s : r.only_in_mfho) only_mfho.push_back(vectors(s));
  return {{"equal", r.equal},
          {"inconclusive", r.inconclusive},
          {"mgs_count", r.mgs_count},
          {"mfho_count", r.mfho_count},
          {"mgs_min_length", r.mgs_min_length},
          {"mgs_max_length", r.mgs_max_length},
          {"mfho_min_length", r.mfho_min_length},
          {"mfho_max_length", r.mfho_max_length},
          {"only_in_mgs", std::move(only_mgs)},
          {"only_in_mfho", std::move(only_mfho)}};
}

json verification_report(const VerificationReport& r) {
  json out = {{"b_spec", r.b_name},
              {"holds", r.holds},
              {"b_module_count", r.b_modules.size()},
              {"ordering", r.ordering},
              {"dim_vectors", vectors(r.dim_vectors)},
              {"forward_orthogonal", r.forward_orthogonal},
              {"maximal", r.maximality.maximal},
              {"discrepancies", r.discrepancies}};
  out["matched_mgs"] = r.matched_mgs ? json(*r.matched_mgs + 1) : json(nullptr);
  return out;
}

json conjecture_report(const ConjectureReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"b_spec", e.b_name}, {"b_module_count", e.b_module_count}});
  return {{"verifying", false},
          {"longest_mgs", r.longest_mgs},
          {"entries", std::move(entries)},
          {"some_spec_attains_longest", r.some_spec_attains_longest}};
}

json problem(const ProblemFile& p) {
  json arrows = json::array();
  for (const auto& a : p.quiver.arrows()) arrows.push_back({{"name", a.name}, {"from", a.source}, {"to", a.target}});
  json out = {{"format_version", p.format_version},
              {"name", p.name},
              {"vertices", p.quiver.vertex_count()},
              {"arrows", std::move(arrows)}};
  if (p.preset) out["preset"] = *p.preset;
  if (p.relations) {
    json rels = json::array();
    for (const auto& r : *p.relations) rels.push_back(path_terms(r.terms, p.quiver, "path"));
    out["relations"] = std::move(rels);
  }
  if (p.potential) out["potential"] = path_terms(p.potential->terms, p.quiver, "cycle");
  if (!p.b_specs.empty()) {
    json specs = json::object();
    for (const auto& s : p.b_specs) {
      if (const auto* arrows_sel = std::get_if<std::vector<std::string>>(&s.selector)) {
        specs[s.name] = {{"arrows", *arrows_sel}};
      } else {
        specs[s.name] = {{"dim_vectors", vectors(std::get<std::vector<DimVector>>(s.selector))}};
      }
    }
    out["b_specs"] = std::move(specs);
  }
  return out;
}

}  // namespace qlab::json_io
