#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json.hpp"
#include "lfdb/store/store.hpp"

namespace lfdb::webapi {

struct Request {
  std::string method = "GET";
  std::string path;
  std::multimap<std::string, std::string> params;
  std::string body;

  std::optional<std::string> param(const std::string& name) const;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

struct ApiOptions {
  double plot_t_max = 30.0;
  unsigned plot_points = 300;
  unsigned knowl_depth = 2;
};

/// Request handlers over one store snapshot. Stateless and safe to call concurrently.
class Api {
 public:
  explicit Api(std::shared_ptr<const store::Store> store, ApiOptions options = {});

  Response handle(const Request& request) const;

  /// Document for an object path such as "EllipticCurve/Q/11/a/1" or "L/Riemann".
  nlohmann::json homepage(const std::string& object_path, const Request& request) const;

 private:
  std::shared_ptr<const store::Store> store_;
  ApiOptions options_;
};

/// Structured error body {code, message, valid_fields?}.
Response error_response(int status, const std::string& code, const std::string& message,
                        const nlohmann::json& valid_fields = nullptr);

/// Serves a store directory. Requests get 503 while a writer holds the directory lock, and the
/// snapshot is reopened when the generation counter moves.
class Server {
 public:
  /// NotFoundError when dir holds no store.
  explicit Server(std::filesystem::path dir, ApiOptions options = {});
  ~Server();

  Response dispatch(const Request& request);

  /// Binds and returns the port (0 picks a free one).
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  void stop();

 private:
  std::shared_ptr<const Api> snapshot();

  std::filesystem::path dir_;
  ApiOptions options_;
  std::mutex mutex_;
  std::shared_ptr<const Api> api_;
  std::uint64_t generation_ = 0;
  struct Http;
  std::unique_ptr<Http> http_;
};

}  // namespace lfdb::webapi
