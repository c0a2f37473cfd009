#pragma once

#include "annulus/errors.hpp"
#include "annulus/json_io.hpp"
#include "annulus/triangulation.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace annulus::service {

struct HistoryEntry {
  Json op;
  Triangulation triangulation;
};

struct Session {
  std::string id;
  std::vector<HistoryEntry> history;  // history[0] is the creation entry
  std::mutex mutex;
  const Triangulation& current() const { return history.back().triangulation; }
};

Json state_json(const Session& s);

class SessionStore {
public:
  explicit SessionStore(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  std::string create(const Triangulation& t, Json op);
  // Runs fn under the session's lock; throws UnknownSession.
  Json with(const std::string& id, const std::function<Json(Session&)>& fn);
  // Applies a transform to the current triangulation and records it.
  Json apply(const std::string& id, Json op, const std::function<Triangulation(const Triangulation&)>& fn);
  Json undo(const std::string& id);
  size_t size() const;

private:
  std::shared_ptr<Session> find(const std::string& id) const;
  void snapshot(const Session& s) const;
  void load();
  std::string fresh_id();

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::optional<std::filesystem::path> snapshot_dir_;
  unsigned long long counter_ = 0;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> static_dir;
  std::optional<std::filesystem::path> snapshot_dir;
};

// --port beats ANNULUS_COX_PORT, which beats 8080; throws MalformedInput on a bad value.
int resolve_port(std::optional<int> flag, const char* env);

int http_status(const Error& e);
Json error_json(const std::string& code, const std::string& message);

void register_routes(httplib::Server& server, SessionStore& store);
// Blocks until the server stops.
void serve(const ServeOptions& options);

}  // namespace annulus::service
