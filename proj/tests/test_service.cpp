#include <gtest/gtest.h>

#include <thread>

#include "quiverlab/presets.hpp"
#include "quiverlab/service.hpp"

using namespace qlab;
using nlohmann::json;

namespace {

struct Service : ::testing::Test {
  std::chrono::steady_clock::time_point now{};
  SessionService service{[this] {
    ServiceConfig c;
    c.debug_replay = true;
    c.clock = [this] { return now; };
    return c;
  }()};

  std::string create(const std::string& preset) {
    auto r = service.handle("POST", "/sessions", json{{"preset", preset}}.dump());
    EXPECT_EQ(r.status, 201) << r.body.dump();
    return r.body.at("id").get<std::string>();
  }
  ServiceResponse mutate(const std::string& id, int v, bool green_only = true) {
    return service.handle("POST", "/sessions/" + id + "/mutate", json{{"vertex", v}, {"green_only", green_only}}.dump());
  }
};

}  // namespace

TEST_F(Service, ListsPresets) {
  const auto r = service.handle("GET", "/presets", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("presets"), json(list_presets()));
}

TEST_F(Service, InitialA2StateIsAllGreen) {
  const auto id = create("a2");
  const auto r = service.handle("GET", "/sessions/" + id, "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["state"]["colors"], (json{{"1", "green"}, {"2", "green"}}));
  EXPECT_FALSE(r.body["state"]["all_red"].get<bool>());
  EXPECT_EQ(r.body["schema_version"], kServiceSchemaVersion);
  EXPECT_EQ(service.handle("GET", "/sessions/" + id + "/green", "").body["green"], (json{1, 2}));
}

TEST_F(Service, MutatingOneThenTwoReachesAllRed) {
  const auto id = create("a2");
  ASSERT_EQ(mutate(id, 1).status, 200);
  const auto r = mutate(id, 2);
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(r.body["state"]["all_red"].get<bool>());
  EXPECT_EQ(r.body["state"]["trace"], (json{{1, 0}, {0, 1}}));
  EXPECT_EQ(r.body["state"]["history"], (json{1, 2}));
}

TEST_F(Service, RedVertexIsRejectedInGreenMode) {
  const auto id = create("a2");
  const auto before = service.handle("GET", "/sessions/" + id, "").body;
  ASSERT_EQ(mutate(id, 1).status, 200);
  const auto r = mutate(id, 1);
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body["error"], "NotGreen");
  // Exploration mode allows it and records a negative c-vector.
  const auto e = mutate(id, 1, false);
  ASSERT_EQ(e.status, 200);
  EXPECT_EQ(e.body["state"]["trace"].back(), (json{-1, 0}));
  EXPECT_EQ(e.body["state"]["quiver"], before["state"]["quiver"]);
  EXPECT_FALSE(e.body["state"]["all_red"].get<bool>());
}

TEST_F(Service, InvalidVertexIs422) {
  const auto id = create("a2");
  EXPECT_EQ(mutate(id, 3).status, 422);
  EXPECT_EQ(mutate(id, 0).status, 422);
  EXPECT_EQ(service.handle("POST", "/sessions/" + id + "/mutate", "{}").status, 400);
  EXPECT_EQ(service.handle("POST", "/sessions/" + id + "/mutate", "not json").status, 400);
}

TEST_F(Service, UndoRestoresInitialState) {
  const auto id = create("a3");
  const auto initial = service.handle("GET", "/sessions/" + id, "").body;
  ASSERT_EQ(mutate(id, 2).status, 200);
  const auto r = service.handle("POST", "/sessions/" + id + "/undo", "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body, initial);
  EXPECT_EQ(service.handle("POST", "/sessions/" + id + "/undo", "").status, 409);
}

TEST_F(Service, Completions) {
  const auto id = create("a2");
  ASSERT_EQ(mutate(id, 2).status, 200);
  const auto r = service.handle("GET", "/sessions/" + id + "/completions?limit=5", "");
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body["completions"].size(), 1u);
  EXPECT_EQ(r.body["completions"][0]["vertices"], (json{2, 1, 2}));
  EXPECT_FALSE(r.body["partial"].get<bool>());
  EXPECT_EQ(service.handle("GET", "/sessions/" + id + "/completions?limit=x", "").status, 400);
}

TEST(ServiceBudget, ExhaustedCompletionBudgetIs503WithPartialFlag) {
  ServiceConfig c;
  c.completion_budget = 5;
  SessionService service(c);
  const auto created = service.handle("POST", "/sessions", R"({"preset": "example33"})");
  const auto id = created.body["id"].get<std::string>();
  const auto r = service.handle("GET", "/sessions/" + id + "/completions?limit=1000", "");
  EXPECT_EQ(r.status, 503);
  EXPECT_TRUE(r.body["partial"].get<bool>());
}

TEST_F(Service, UnknownSessionsAndEndpoints) {
  EXPECT_EQ(service.handle("GET", "/sessions/nope", "").status, 404);
  EXPECT_EQ(service.handle("POST", "/sessions/nope/mutate", R"({"vertex": 1})").status, 404);
  EXPECT_EQ(service.handle("GET", "/nothing", "").status, 404);
  EXPECT_EQ(service.handle("POST", "/sessions", R"({"preset": "nope"})").status, 404);
  EXPECT_EQ(service.handle("POST", "/sessions", "{}").status, 400);
}

TEST_F(Service, InlineProblemAndDelete) {
  const auto r = service.handle("POST", "/sessions",
                                R"({"problem": {"format_version": 1, "vertices": 2,
                                   "arrows": [{"name": "a", "from": 2, "to": 1}]}})");
  ASSERT_EQ(r.status, 201);
  const auto id = r.body["id"].get<std::string>();
  EXPECT_EQ(service.handle("DELETE", "/sessions/" + id, "").status, 200);
  EXPECT_EQ(service.handle("GET", "/sessions/" + id, "").status, 404);
  const auto bad = service.handle("POST", "/sessions", R"({"problem": {"format_version": 1, "vertices": 0}})");
  EXPECT_EQ(bad.status, 422);
}

TEST_F(Service, IdleSessionsExpire) {
  const auto id = create("a2");
  now += std::chrono::minutes(29);
  EXPECT_EQ(service.handle("GET", "/sessions/" + id, "").status, 200);
  now += std::chrono::minutes(31);
  EXPECT_EQ(service.handle("GET", "/sessions/" + id, "").status, 404);
  EXPECT_EQ(service.session_count(), 0u);
}

TEST_F(Service, ConcurrentSessionsStayConsistent) {
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create("a3"));
  std::vector<std::jthread> workers;
  for (const auto& id : ids) {
    workers.emplace_back([this, id] {
      for (int round = 0; round < 25; ++round) {
        (void)mutate(id, 1 + round % 3, false);
        (void)service.handle("GET", "/sessions/" + id, "");
      }
    });
  }
  workers.clear();
  for (const auto& id : ids) {
    const auto r = service.handle("GET", "/sessions/" + id, "");
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(r.body["state"]["history"].size(), 25u);
  }
}
