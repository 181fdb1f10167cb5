#include "quiverlab/service.hpp"

#include <charconv>
#include <random>
#include <thread>

#include <httplib.h>

#include "quiverlab/error.hpp"
#include "quiverlab/presets.hpp"
#include "quiverlab/serialize.hpp"

namespace qlab {
namespace {

using nlohmann::json;

ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, {{"error", std::string(code)}, {"message", message}}};
}

ServiceResponse from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotGreen:
      return error_response(409, to_string(e.code()), e.what());
    case ErrorCode::InvalidVertex:
    case ErrorCode::MutationAtFrozenVertex:
    case ErrorCode::InvalidQuiver:
    case ErrorCode::InvalidRelation:
    case ErrorCode::InvalidPotential:
    case ErrorCode::ParseError:
    case ErrorCode::SemanticError:
    case ErrorCode::UnknownArrow:
      return error_response(422, to_string(e.code()), e.what());
    default:
      return error_response(500, to_string(e.code()), e.what());
  }
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    auto next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    if (next > pos) parts.emplace_back(path.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

std::map<std::string, std::string> parse_query(std::string_view q) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < q.size()) {
    auto amp = q.find('&', pos);
    if (amp == std::string_view::npos) amp = q.size();
    auto item = q.substr(pos, amp - pos);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      out[std::string(item)] = "";
    } else {
      out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
    pos = amp + 1;
  }
  return out;
}

std::optional<json> parse_body(std::string_view body) {
  if (body.empty()) return json::object();
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

}  // namespace

SessionService::SessionService(ServiceConfig config)
    : config_(std::move(config)), id_state_(std::random_device{}() ^ (std::uint64_t{std::random_device{}()} << 32)) {}

std::string SessionService::new_id() {
  std::lock_guard lock(id_mutex_);
  std::mt19937_64 rng(id_state_);
  id_state_ = rng();
  return fnv1a_hex(std::to_string(id_state_) + std::to_string(rng()));
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::size_t SessionService::expire_idle() {
  const auto now = config_.clock();
  std::unique_lock lock(sessions_mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
    if (session_lock.owns_lock() && now - it->second->last_touched > config_.idle_timeout) {
      session_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json SessionService::session_json(const Session& s) const {
  return {{"schema", "quiverlab.session"},
          {"schema_version", kServiceSchemaVersion},
          {"id", s.id},
          {"name", s.problem.name},
          {"vertices", s.quiver.vertex_count()},
          {"arrow_names", [&] {
             json names = json::array();
             for (const auto& a : s.problem.quiver.arrows()) {
               names.push_back({{"name", a.name}, {"from", a.source}, {"to", a.target}});
             }
             return names;
           }()},
          {"checksum", fnv1a_hex(s.state.state.encode())},
          {"state", json_io::search_state(s.state)}};
}

ServiceResponse SessionService::handle(std::string_view method, std::string_view target, std::string_view body) {
  expire_idle();
  const auto qpos = target.find('?');
  const auto path = split_path(target.substr(0, qpos));
  const auto query = qpos == std::string_view::npos ? std::map<std::string, std::string>{}
                                                    : parse_query(target.substr(qpos + 1));
  try {
    if (path.size() == 1 && path[0] == "presets") {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return {200, {{"schema_version", kServiceSchemaVersion}, {"presets", list_presets()}}};
    }
    if (path.size() == 1 && path[0] == "health") {
      return {200, {{"status", "ok"}, {"sessions", session_count()}}};
    }
    if (path.empty() || path[0] != "sessions") return error_response(404, "NotFound", "no such endpoint");
    if (path.size() == 1) {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return create_session(body);
    }
    if (path.size() > 3) return error_response(404, "NotFound", "no such endpoint");
    auto session = find(path[1]);
    if (!session) return error_response(404, "UnknownSession", "unknown session '" + path[1] + "'");
    const std::string action = path.size() == 3 ? path[2] : "";
    if (action.empty() && method == "DELETE") {
      std::unique_lock lock(sessions_mutex_);
      sessions_.erase(path[1]);
      return {200, {{"deleted", path[1]}}};
    }
    return session_request(session, method, action, query, body);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

ServiceResponse SessionService::create_session(std::string_view body) {
  auto req = parse_body(body);
  if (!req) return error_response(400, "BadRequest", "body must be a JSON object");
  auto session = std::make_shared<Session>();
  if (req->contains("preset")) {
    if (!(*req)["preset"].is_string()) return error_response(400, "BadRequest", "preset must be a string");
    const auto name = (*req)["preset"].get<std::string>();
    if (!preset_text(name)) return error_response(404, "UnknownPreset", "unknown preset '" + name + "'");
    session->problem = load_preset(name);
  } else if (req->contains("problem")) {
    session->problem = parse_problem((*req)["problem"].dump());
  } else if (config_.default_problem) {
    session->problem = *config_.default_problem;
  } else {
    return error_response(400, "BadRequest", "body needs \"preset\" or \"problem\"");
  }
  session->quiver = session->problem.quiver.count_quiver();
  session->state = SearchState::initial(session->quiver);
  session->id = new_id();
  session->last_touched = config_.clock();
  json out = session_json(*session);
  {
    std::unique_lock lock(sessions_mutex_);
    sessions_[session->id] = session;
  }
  return {201, std::move(out)};
}

ServiceResponse SessionService::session_request(const std::shared_ptr<Session>& session, std::string_view method,
                                                std::string_view action,
                                                const std::map<std::string, std::string>& query,
                                                std::string_view body) {
  std::lock_guard lock(session->mutex);
  session->last_touched = config_.clock();
  if (config_.debug_replay && replay(session->quiver, session->state.history, false) != session->state) {
    return error_response(500, "ReplayMismatch", "session state differs from the replay of its history");
  }
  if (action.empty()) {
    if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET or DELETE");
    return {200, session_json(*session)};
  }
  if (action == "green") {
    if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
    return {200, {{"green", green_vertices(session->state)}}};
  }
  if (action == "mutate") {
    if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
    auto req = parse_body(body);
    if (!req || !req->contains("vertex") || !(*req)["vertex"].is_number_integer()) {
      return error_response(400, "BadRequest", "body needs an integer \"vertex\"");
    }
    bool green_only = true;
    if (req->contains("green_only")) {
      if (!(*req)["green_only"].is_boolean()) return error_response(400, "BadRequest", "green_only must be a boolean");
      green_only = (*req)["green_only"].get<bool>();
    }
    const int vertex = (*req)["vertex"].get<int>();
    if (vertex < 1 || vertex > session->state.mutable_count()) {
      return error_response(422, to_string(ErrorCode::InvalidVertex),
                            "vertex " + std::to_string(vertex) + " is not a mutable vertex");
    }
    session->state = green_only ? step(session->state, vertex) : explore_step(session->state, vertex);
    return {200, session_json(*session)};
  }
  if (action == "undo") {
    if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
    if (session->state.history.empty()) return error_response(409, "NothingToUndo", "history is empty");
    auto history = session->state.history;
    history.pop_back();
    session->state = replay(session->quiver, history, false);
    return {200, session_json(*session)};
  }
  if (action == "completions") {
    if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
    std::size_t limit = 10;
    if (auto it = query.find("limit"); it != query.end()) {
      const auto& text = it->second;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), limit);
      if (ec != std::errc{} || ptr != text.data() + text.size() || limit == 0 || limit > config_.max_completions) {
        return error_response(400, "BadRequest",
                              "limit must be an integer in 1.." + std::to_string(config_.max_completions));
      }
    }
    MgsOptions options;
    options.bounds.max_states = config_.completion_budget;
    options.max_results = limit;
    const auto result = complete_mgs(session->state, options);
    json seqs = json::array();
    for (const auto& s : result.sequences) seqs.push_back(json_io::green_sequence(s));
    json out = {{"schema_version", kServiceSchemaVersion},
                {"completions", std::move(seqs)},
                {"partial", result.truncated},
                {"states_visited", result.states_visited}};
    if (result.truncated) {
      out["error"] = "SearchBudgetExceeded";
      out["message"] = "search bound reached; completions may be incomplete";
      return {503, std::move(out)};
    }
    return {200, std::move(out)};
  }
  return error_response(404, "NotFound", "no such endpoint");
}

bool serve_http(SessionService& service, const std::string& host, int port) {
  httplib::Server server;
  const auto& cfg = service.config();
  server.set_default_headers({{"Access-Control-Allow-Origin", cfg.cors_origin},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  if (!cfg.static_dir.empty()) server.set_mount_point("/", cfg.static_dir);
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    auto out = service.handle(req.method, req.target, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  const std::string api = R"(/(presets|health|sessions)(/.*)?)";
  server.Get(api, forward);
  server.Post(api, forward);
  server.Delete(api, forward);
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  std::jthread sweeper([&service](std::stop_token stop) {
    while (!stop.stop_requested()) {
      for (int i = 0; i < 60 && !stop.stop_requested(); ++i) std::this_thread::sleep_for(std::chrono::seconds(1));
      service.expire_idle();
    }
  });
  return server.listen(host, port);
}

}  // namespace qlab
