#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "quiverlab/green_search.hpp"
#include "quiverlab/problem.hpp"

namespace qlab {

inline constexpr int kServiceSchemaVersion = 1;

struct ServiceConfig {
  std::chrono::seconds idle_timeout{30 * 60};
  /// Re-derive every session state from its history on each request.
  bool debug_replay = false;
  /// State budget of one completions request.
  std::int64_t completion_budget = 2'000'000;
  std::size_t max_completions = 1000;
  std::string cors_origin = "*";
  /// Served under / when nonempty.
  std::string static_dir;
  /// Used by POST /sessions when the body names neither preset nor problem.
  std::optional<ProblemFile> default_problem;
  std::function<std::chrono::steady_clock::time_point()> clock = [] {
    return std::chrono::steady_clock::now();
  };
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

/// Transport-independent request handling; the HTTP adapter below only
/// forwards method, target and body.
class SessionService {
 public:
  explicit SessionService(ServiceConfig config = {});

  /// target is the request path with an optional "?query".
  ServiceResponse handle(std::string_view method, std::string_view target, std::string_view body);

  std::size_t session_count() const;
  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire_idle();

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Session {
    std::string id;
    ProblemFile problem;
    Quiver quiver;
    SearchState state;
    std::chrono::steady_clock::time_point last_touched;
    std::mutex mutex;
  };

  ServiceResponse create_session(std::string_view body);
  ServiceResponse session_request(const std::shared_ptr<Session>& session, std::string_view method,
                                  std::string_view action, const std::map<std::string, std::string>& query,
                                  std::string_view body);
  nlohmann::json session_json(const Session& s) const;
  std::shared_ptr<Session> find(const std::string& id);
  std::string new_id();

  ServiceConfig config_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

/// Blocks serving HTTP on host:port until the process is stopped. Returns
/// false if the socket could not be bound.
bool serve_http(SessionService& service, const std::string& host, int port);

}  // namespace qlab
