#include "service.hpp"

#include "annulus/errors.hpp"
#include "annulus/qp.hpp"
#include "annulus/tquiver.hpp"
#include "annulus/transforms.hpp"

#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace annulus::service {

namespace {

const std::set<std::string> kBadRequest{"UnknownArc", "UnknownArcId", "UnknownVertex"};

void only_fields(const Json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) raise("MalformedInput", "request body must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) raise("UnknownField", "unexpected field '" + k + "'");
}

Json body_of(const httplib::Request& req, const std::set<std::string>& allowed) {
  Json j = req.body.empty() ? Json::object() : parse_json(req.body);
  only_fields(j, allowed);
  return j;
}

std::string string_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_string()) raise("MalformedInput", "field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

AnnulusShape shape_field(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    raise("MalformedInput", "shape must be [p, q]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<std::string> flippable(const Triangulation& t) {
  std::vector<std::string> out;
  for (const auto& a : t.arcs) {
    try {
      flipped_arc(t, a.id);
      out.push_back(a.id);
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<std::string> transforms(const Session& s) {
  const Triangulation& t = s.current();
  std::vector<std::string> out{"flip"};
  if (t.finite()) {
    out.push_back("dehn");
    out.push_back("limit");
    try {
      coxeter(t);
      out.push_back("coxeter");
    } catch (const Error&) {
    }
  }
  if (s.history.size() > 1) out.push_back("undo");
  return out;
}

void send(httplib::Response& res, const std::function<Json()>& fn) {
  try {
    res.set_content(fn().dump(), "application/json");
  } catch (const Error& e) {
    res.status = http_status(e);
    res.set_content(error_json(e.code(), e.what()).dump(), "application/json");
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(error_json("InternalError", e.what()).dump(), "application/json");
  }
}

}  // namespace

Json state_json(const Session& s) {
  const Triangulation& t = s.current();
  return Json{{"id", s.id},
              {"triangulation", to_json(t)},
              {"quiver", to_json(quiver_of(t))},
              {"flippable", flippable(t)},
              {"bounding", bounding_arcs(t)},
              {"transforms", transforms(s)},
              {"history_length", s.history.size() - 1}};
}

SessionStore::SessionStore(std::optional<std::filesystem::path> snapshot_dir) : snapshot_dir_(std::move(snapshot_dir)) {
  if (snapshot_dir_) {
    std::filesystem::create_directories(*snapshot_dir_);
    load();
  }
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream ss;
  ss << std::hex << rng() << ++counter_;
  return ss.str();
}

std::string SessionStore::create(const Triangulation& t, Json op) {
  auto s = std::make_shared<Session>();
  s->history.push_back({std::move(op), t});
  std::lock_guard lock(mutex_);
  do s->id = fresh_id();
  while (sessions_.count(s->id));
  sessions_[s->id] = s;
  snapshot(*s);
  return s->id;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) raise("UnknownSession", "no session '" + id + "'");
  return it->second;
}

Json SessionStore::with(const std::string& id, const std::function<Json(Session&)>& fn) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return fn(*s);
}

Json SessionStore::apply(const std::string& id, Json op, const std::function<Triangulation(const Triangulation&)>& fn) {
  return with(id, [&](Session& s) {
    Triangulation next = fn(s.current());
    s.history.push_back({std::move(op), std::move(next)});
    snapshot(s);
    return state_json(s);
  });
}

Json SessionStore::undo(const std::string& id) {
  return with(id, [&](Session& s) {
    if (s.history.size() < 2) raise("NothingToUndo", "session has no operations to undo");
    s.history.pop_back();
    snapshot(s);
    return state_json(s);
  });
}

size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::snapshot(const Session& s) const {
  if (!snapshot_dir_) return;
  const auto path = *snapshot_dir_ / (s.id + ".jsonl");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    for (const auto& h : s.history) out << Json{{"op", h.op}, {"triangulation", to_json(h.triangulation)}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load() {
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() != ".jsonl") continue;
    auto s = std::make_shared<Session>();
    s->id = entry.path().stem().string();
    std::ifstream in(entry.path());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json j = parse_json(line);
      s->history.push_back({j.at("op"), triangulation_from_json(j.at("triangulation"))});
    }
    if (!s->history.empty()) sessions_[s->id] = s;
  }
}

int resolve_port(std::optional<int> flag, const char* env) {
  int port = 8080;
  if (flag) {
    port = *flag;
  } else if (env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0') raise("MalformedInput", std::string("ANNULUS_COX_PORT is not a number: ") + env);
    port = int(v);
  }
  if (port < 0 || port > 65535) raise("MalformedInput", "port out of range: " + std::to_string(port));
  return port;
}

int http_status(const Error& e) {
  if (e.code() == "UnknownSession") return 404;
  if (e.category() == ErrorCategory::MalformedInput || kBadRequest.count(e.code())) return 400;
  return 409;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}};
}

void register_routes(httplib::Server& server, SessionStore& store) {
  const std::string session = R"(/api/session/([A-Za-z0-9]+))";

  server.Post("/api/session", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      const Json body = body_of(req, {"shape", "triangulation"});
      if (body.contains("shape") == body.contains("triangulation"))
        raise("MalformedInput", "give exactly one of shape or triangulation");
      const Triangulation t =
          body.contains("shape") ? fan_triangulation(shape_field(body["shape"])) : triangulation_from_json(body["triangulation"]);
      const std::string id = store.create(t, Json{{"op", "create"}});
      return store.with(id, [](Session& s) { return state_json(s); });
    });
  });

  server.Get(session, [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] { return store.with(req.matches[1], [](Session& s) { return state_json(s); }); });
  });

  server.Post(session + "/flip", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      const std::string arc = string_field(body_of(req, {"arc_id"}), "arc_id");
      return store.apply(req.matches[1], Json{{"op", "flip"}, {"arc_id", arc}},
                         [&](const Triangulation& t) { return flip(t, arc); });
    });
  });

  server.Post(session + "/dehn", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      const Direction d = parse_direction(string_field(body_of(req, {"direction"}), "direction"));
      return store.apply(req.matches[1], Json{{"op", "dehn"}, {"direction", to_string(d)}},
                         [&](const Triangulation& t) { return dehn_twist(t, d); });
    });
  });

  server.Post(session + "/coxeter", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      body_of(req, {});
      return store.apply(req.matches[1], Json{{"op", "coxeter"}}, [](const Triangulation& t) { return coxeter(t); });
    });
  });

  server.Post(session + "/limit", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      const Direction d = parse_direction(string_field(body_of(req, {"direction"}), "direction"));
      return store.apply(req.matches[1], Json{{"op", "limit"}, {"direction", to_string(d)}},
                         [&](const Triangulation& t) { return dehn_limit(t, d); });
    });
  });

  server.Post(session + "/undo", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      body_of(req, {});
      return store.undo(req.matches[1]);
    });
  });

  server.Get(session + "/quiver", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] {
      return store.with(req.matches[1], [&](Session& s) {
        if (req.has_param("framed")) return to_json(framed_quiver(s.current(), req.get_param_value("framed")));
        return to_json(quiver_of(s.current()));
      });
    });
  });

  server.Get(session + "/qp", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, [&] { return store.with(req.matches[1], [](Session& s) { return to_json(potential_of(s.current())); }); });
  });
}

void serve(const ServeOptions& options) {
  SessionStore store(options.snapshot_dir);
  httplib::Server server;
  register_routes(server, store);
  if (options.static_dir && !server.set_mount_point("/", options.static_dir->string()))
    raise("MalformedInput", "static directory does not exist: " + options.static_dir->string());
  if (!server.bind_to_port(options.host, options.port))
    raise("PortUnavailable", "cannot bind " + options.host + ":" + std::to_string(options.port));
  server.listen_after_bind();
}

}  // namespace annulus::service
