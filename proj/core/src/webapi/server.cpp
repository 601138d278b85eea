#include "httplib.h"
#include "lfdb/error.hpp"
#include "lfdb/webapi/api.hpp"

namespace lfdb::webapi {

struct Server::Http {
  httplib::Server server;
};

Server::Server(std::filesystem::path dir, ApiOptions options)
    : dir_(std::move(dir)), options_(options), http_(std::make_unique<Http>()) {
  // fail at startup rather than on the first request
  std::shared_ptr<const store::Store> store = store::Store::open(dir_, false);
  generation_ = store::Store::read_generation(dir_);
  api_ = std::make_shared<Api>(std::move(store), options_);

  auto handler = [this](const httplib::Request& in, httplib::Response& out) {
    Request req;
    req.method = in.method;
    req.path = in.path;
    for (const auto& [k, v] : in.params) req.params.emplace(k, v);
    req.body = in.body;
    const Response r = dispatch(req);
    out.status = r.status;
    out.set_content(r.body, r.content_type);
  };
  http_->server.Get(".*", handler);
  http_->server.Post(".*", handler);
}

Server::~Server() { stop(); }

std::shared_ptr<const Api> Server::snapshot() {
  std::lock_guard lock(mutex_);
  const auto gen = store::Store::read_generation(dir_);
  if (gen != generation_) {
    api_ = std::make_shared<Api>(std::shared_ptr<const store::Store>(store::Store::open(dir_, false)), options_);
    generation_ = gen;
  }
  return api_;
}

Response Server::dispatch(const Request& request) {
  const bool health = request.path == "/health";
  if (store::DirectoryLock::is_held(dir_)) {
    if (health) return {200, "application/json", R"({"status":"ok","writer_active":true})"};
    return error_response(503, "busy", "a build is writing to the data directory; retry later");
  }
  try {
    return snapshot()->handle(request);
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

int Server::bind(const std::string& host, int port) {
  if (port == 0) return http_->server.bind_to_any_port(host);
  if (!http_->server.bind_to_port(host, port)) throw std::runtime_error("cannot bind port " + std::to_string(port));
  return port;
}

void Server::run() { http_->server.listen_after_bind(); }

void Server::stop() {
  if (http_ && http_->server.is_running()) http_->server.stop();
}

}  // namespace lfdb::webapi
