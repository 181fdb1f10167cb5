#include "quiverlab/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quiverlab/error.hpp"

namespace qlab {
namespace {

using nlohmann::json;

[[noreturn]] void semantic(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SemanticError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) semantic(where, "unknown key '" + key + "'");
  }
}

int get_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) semantic(where, "missing key '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) semantic(where + "/" + key, "expected an integer");
  return v.get<int>();
}

Rational get_coeff(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      semantic(where, e.what());
    }
  }
  semantic(where, "coefficient must be an integer or a string \"p/q\"");
}

Path get_path(const json& v, const NamedQuiver& quiver, const std::string& where) {
  if (!v.is_array() || v.empty()) semantic(where, "expected a nonempty array of arrow names");
  Path path;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_string()) semantic(where + "/" + std::to_string(k), "expected an arrow name");
    auto idx = quiver.find_arrow(v[k].get<std::string>());
    if (!idx) semantic(where + "/" + std::to_string(k), "unknown arrow '" + v[k].get<std::string>() + "'");
    path.push_back(*idx);
  }
  return path;
}

std::vector<PathTerm> get_terms(const json& v, const NamedQuiver& quiver, const std::string& where,
                                const char* path_key) {
  if (!v.is_array() || v.empty()) semantic(where, "expected a nonempty array of terms");
  std::vector<PathTerm> terms;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const auto& t = v[k];
    if (!t.is_object()) semantic(at, "expected an object with \"coeff\" and \"" + std::string(path_key) + "\"");
    allow_keys(t, at, {"coeff", path_key});
    Rational coeff = t.contains("coeff") ? get_coeff(t.at("coeff"), at + "/coeff") : Rational(1);
    if (!t.contains(path_key)) semantic(at, "missing key '" + std::string(path_key) + "'");
    terms.push_back({coeff, get_path(t.at(path_key), quiver, at + "/" + path_key)});
  }
  return terms;
}

}  // namespace

BoundQuiver ProblemFile::algebra() const {
  if (relations) return BoundQuiver(quiver, *relations);
  if (potential) return BoundQuiver(quiver, cyclic_derivatives(quiver, *potential));
  return BoundQuiver(quiver, {});
}

const BSpec* ProblemFile::find_b_spec(std::string_view spec_name) const {
  for (const auto& s : b_specs) {
    if (s.name == spec_name) return &s;
  }
  return nullptr;
}

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorCode::ParseError, line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
  }
  if (!doc.is_object()) semantic("", "top level must be an object");
  allow_keys(doc, "", {"format_version", "name", "preset", "vertices", "arrows", "relations",
                       "potential", "b_specs"});

  ProblemFile problem;
  problem.format_version = get_int(doc, "format_version", "");
  if (problem.format_version != kProblemFormatVersion) {
    semantic("/format_version", "unsupported format_version " + std::to_string(problem.format_version));
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) semantic("/name", "expected a string");
    problem.name = doc["name"].get<std::string>();
  }
  if (doc.contains("preset")) {
    if (!doc["preset"].is_string()) semantic("/preset", "expected a string");
    problem.preset = doc["preset"].get<std::string>();
  }
  const int n = get_int(doc, "vertices", "");
  if (n < 1) semantic("/vertices", "need at least one vertex");

  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    const auto& list = doc["arrows"];
    if (!list.is_array()) semantic("/arrows", "expected an array");
    std::set<std::string> names;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "/arrows/" + std::to_string(k);
      const auto& a = list[k];
      if (!a.is_object()) semantic(at, "expected an object");
      allow_keys(a, at, {"name", "from", "to"});
      if (!a.contains("name") || !a["name"].is_string() || a["name"].get<std::string>().empty()) {
        semantic(at + "/name", "expected a nonempty string");
      }
      Arrow arrow{a["name"].get<std::string>(), get_int(a, "from", at), get_int(a, "to", at)};
      if (!names.insert(arrow.name).second) semantic(at + "/name", "duplicate arrow name '" + arrow.name + "'");
      if (arrow.source < 1 || arrow.source > n) semantic(at + "/from", "vertex out of range");
      if (arrow.target < 1 || arrow.target > n) semantic(at + "/to", "vertex out of range");
      if (arrow.source == arrow.target) semantic(at, "loops are not allowed");
      arrows.push_back(std::move(arrow));
    }
  }
  problem.quiver = NamedQuiver(n, std::move(arrows));
  const Quiver counts = problem.quiver.count_quiver();
  try {
    counts.validate_cluster();
  } catch (const Error& e) {
    semantic("/arrows", e.what());
  }
  if (!counts.is_connected()) problem.warnings.push_back("quiver is not connected");

  if (doc.contains("relations")) {
    const auto& list = doc["relations"];
    if (!list.is_array()) semantic("/relations", "expected an array");
    std::vector<Relation> relations;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "/relations/" + std::to_string(k);
      Relation rel{get_terms(list[k], problem.quiver, at, "path")};
      try {
        (void)BoundQuiver(problem.quiver, {rel});
      } catch (const Error& e) {
        std::string what = e.what();
        if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        semantic(at, what);
      }
      relations.push_back(std::move(rel));
    }
    problem.relations = std::move(relations);
  }
  if (doc.contains("potential")) {
    Potential w{get_terms(doc["potential"], problem.quiver, "/potential", "cycle")};
    try {
      auto derived = cyclic_derivatives(problem.quiver, w);
      if (!problem.relations) (void)BoundQuiver(problem.quiver, derived);
      if (problem.relations) {
        problem.potential_consistent = generators_match_up_to_scalar(derived, *problem.relations);
        if (!*problem.potential_consistent) {
          problem.warnings.push_back("cyclic derivatives of the potential do not match the listed relations");
        }
      }
    } catch (const Error& e) {
      semantic("/potential", e.what());
    }
    problem.potential = std::move(w);
  }
  if (doc.contains("b_specs")) {
    const auto& specs = doc["b_specs"];
    if (!specs.is_object()) semantic("/b_specs", "expected an object keyed by name");
    for (const auto& [spec_name, body] : specs.items()) {
      const std::string at = "/b_specs/" + spec_name;
      if (!body.is_object()) semantic(at, "expected an object");
      allow_keys(body, at, {"arrows", "dim_vectors"});
      if (body.contains("arrows") == body.contains("dim_vectors")) {
        semantic(at, "give exactly one of \"arrows\" or \"dim_vectors\"");
      }
      BSpec spec;
      spec.name = spec_name;
      if (body.contains("arrows")) {
        std::vector<std::string> names;
        const auto& list = body["arrows"];
        if (!list.is_array()) semantic(at + "/arrows", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
          if (!list[k].is_string() || !problem.quiver.find_arrow(list[k].get<std::string>())) {
            semantic(at + "/arrows/" + std::to_string(k), "unknown arrow");
          }
          names.push_back(list[k].get<std::string>());
        }
        spec.selector = std::move(names);
      } else {
        std::vector<DimVector> vectors;
        const auto& list = body["dim_vectors"];
        if (!list.is_array()) semantic(at + "/dim_vectors", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
          const std::string vat = at + "/dim_vectors/" + std::to_string(k);
          const auto& v = list[k];
          if (!v.is_array() || v.size() != static_cast<std::size_t>(n)) {
            semantic(vat, "expected " + std::to_string(n) + " integers");
          }
          DimVector dv;
          for (const auto& x : v) {
            if (!x.is_number_integer() || x.get<int>() < 0) semantic(vat, "expected nonnegative integers");
            dv.push_back(x.get<int>());
          }
          vectors.push_back(std::move(dv));
        }
        spec.selector = std::move(vectors);
      }
      problem.b_specs.push_back(std::move(spec));
    }
  }
  return problem;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

}  // namespace qlab
