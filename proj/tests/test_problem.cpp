#include <gtest/gtest.h>

#include "quiverlab/error.hpp"
#include "quiverlab/presets.hpp"
#include "quiverlab/problem.hpp"
#include "quiverlab/serialize.hpp"

using namespace qlab;

namespace {

Error parse_error(std::string_view text) {
  try {
    (void)parse_problem(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorCode::InvalidQuiver, "");
}

constexpr std::string_view kA3 = R"({
  "format_version": 1,
  "vertices": 3,
  "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 3}],
  "relations": [[{"coeff": 1, "path": ["a", "b"]}]]
})";

}  // namespace

TEST(ParseProblem, MinimalFile) {
  const auto p = parse_problem(R"({"format_version": 1, "vertices": 1})");
  EXPECT_EQ(p.quiver.vertex_count(), 1);
  EXPECT_TRUE(p.quiver.arrows().empty());
  EXPECT_FALSE(p.relations.has_value());
}

TEST(ParseProblem, FourVertexPreset) {
  const auto p = load_preset("example33");
  EXPECT_EQ(p.quiver.arrow_count(), 5u);
  ASSERT_TRUE(p.relations.has_value());
  EXPECT_EQ(p.relations->size(), 5u);
  ASSERT_TRUE(p.potential_consistent.has_value());
  EXPECT_TRUE(*p.potential_consistent);
  ASSERT_NE(p.find_b_spec("B"), nullptr);
  ASSERT_NE(p.find_b_spec("Bprime"), nullptr);
  EXPECT_EQ(p.find_b_spec("C"), nullptr);
  EXPECT_EQ(p.algebra().relations().size(), 5u);
}

TEST(ParseProblem, PotentialAloneDefinesTheRelations) {
  const auto p = parse_problem(R"({
    "format_version": 1, "vertices": 3,
    "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 3}, {"name": "c", "from": 3, "to": 1}],
    "potential": [{"coeff": 1, "cycle": ["a", "b", "c"]}]
  })");
  EXPECT_EQ(p.algebra().relations().size(), 3u);
  EXPECT_FALSE(p.potential_consistent.has_value());
}

TEST(ParseProblem, SyntaxErrorReportsLineAndColumn) {
  const auto e = parse_error("{\n  \"vertices\": 2,\n  oops\n}");
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
}

TEST(ParseProblem, SemanticErrors) {
  struct Case {
    std::string_view text;
    std::string_view pointer;
  };
  const Case cases[] = {
      {R"({"format_version": 2, "vertices": 1})", "/format_version"},
      {R"({"format_version": 1, "vertices": 0})", "/vertices"},
      {R"({"format_version": 1, "vertices": 1, "extra": true})", "/"},
      {R"({"format_version": 1, "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 3}]})", "/arrows/0/to"},
      {R"({"format_version": 1, "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "a", "from": 1, "to": 2}]})",
       "/arrows/1/name"},
      {R"({"format_version": 1, "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 1}]})",
       "/arrows"},
      {R"({"format_version": 1, "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}],
          "relations": [[{"coeff": 1, "path": ["z"]}]]})",
       "/relations/0/0/path/0"},
  };
  for (const auto& c : cases) {
    const auto e = parse_error(c.text);
    EXPECT_EQ(e.code(), ErrorCode::SemanticError) << c.text;
    EXPECT_NE(std::string(e.what()).find(std::string(c.pointer)), std::string::npos) << e.what();
  }
}

TEST(ParseProblem, NonComposableRelationIsRejected) {
  const auto e = parse_error(R"({
    "format_version": 1, "vertices": 3,
    "arrows": [{"name": "alpha", "from": 3, "to": 2}, {"name": "gamma", "from": 1, "to": 3}],
    "relations": [[{"coeff": 1, "path": ["gamma", "gamma"]}]]
  })");
  EXPECT_EQ(e.code(), ErrorCode::SemanticError);
  EXPECT_NE(std::string(e.what()).find("/relations/0"), std::string::npos);
}

TEST(ParseProblem, FractionalCoefficients) {
  const auto p = parse_problem(R"({
    "format_version": 1, "vertices": 3,
    "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 3}, {"name": "c", "from": 1, "to": 3}],
    "relations": [[{"coeff": "1/2", "path": ["a", "b"]}]]
  })");
  EXPECT_EQ(p.relations->front().terms.front().coeff, Rational(1, 2));
}

TEST(ParseProblem, DisconnectedQuiverWarns) {
  const auto p = parse_problem(R"({"format_version": 1, "vertices": 2})");
  EXPECT_FALSE(p.warnings.empty());
}

TEST(ParseProblem, InconsistentPotentialWarns) {
  const auto p = parse_problem(R"({
    "format_version": 1, "vertices": 3,
    "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 3}, {"name": "c", "from": 3, "to": 1}],
    "relations": [[{"coeff": 1, "path": ["a", "b"]}]],
    "potential": [{"coeff": 1, "cycle": ["a", "b", "c"]}]
  })");
  ASSERT_TRUE(p.potential_consistent.has_value());
  EXPECT_FALSE(*p.potential_consistent);
  EXPECT_EQ(p.algebra().relations().size(), 1u);
}

TEST(ParseProblem, ProblemRoundTrip) {
  for (const auto& name : list_presets()) {
    const auto p = load_preset(name);
    const auto again = parse_problem(json_io::problem(p).dump());
    EXPECT_EQ(again.quiver, p.quiver) << name;
    EXPECT_EQ(again.relations, p.relations) << name;
    EXPECT_EQ(again.potential, p.potential) << name;
    EXPECT_EQ(json_io::problem(again).dump(), json_io::problem(p).dump()) << name;
  }
  const auto a3 = parse_problem(kA3);
  EXPECT_EQ(parse_problem(json_io::problem(a3).dump()).relations, a3.relations);
}

TEST(Presets, AllPresetsLoad) {
  const auto names = list_presets();
  EXPECT_EQ(names, (std::vector<std::string>{"a1", "a2", "a3", "example33"}));
  for (const auto& n : names) EXPECT_NO_THROW((void)load_preset(n));
  EXPECT_FALSE(preset_text("nope").has_value());
  EXPECT_THROW((void)load_problem_source("preset:nope"), Error);
}

TEST(Serialize, MgsRoundTripAndDeterminism) {
  const auto q = load_preset("a3").quiver.count_quiver();
  const auto r = enumerate_mgs(q);
  const auto text = json_io::mgs_result(r).dump(2);
  const auto back = json_io::mgs_result_from(nlohmann::json::parse(text));
  EXPECT_EQ(back.sequences, r.sequences);
  EXPECT_EQ(back.truncated, r.truncated);
  EXPECT_EQ(json_io::mgs_result(enumerate_mgs(q)).dump(2), text);
}

TEST(Serialize, CatalogRoundTripAndDeterminism) {
  const auto bq = load_preset("example33").algebra();
  const auto c = enumerate_thin_schurian(bq);
  const auto text = json_io::catalog(c).dump(2);
  const auto back = json_io::catalog_from(nlohmann::json::parse(text), bq);
  EXPECT_EQ(back.modules, c.modules);
  EXPECT_EQ(back.complete_thin, c.complete_thin);
  EXPECT_EQ(json_io::catalog(enumerate_thin_schurian(bq)).dump(2), text);
}

TEST(Serialize, RepresentationRejectsWrongShape) {
  const NamedQuiver q(2, {{"a", 1, 2}});
  const auto j = nlohmann::json::parse(R"({"dims": [1, 1], "arrows": {"a": [["1", "2"]]}})");
  EXPECT_THROW((void)json_io::representation_from(j, q), Error);
}
