// Copyright 2026 The seerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON over HTTP front end.
//
//   GET  /experts?q=&k=      GET /expertise?author=&k=   GET /related?q=&k=
//   POST /documents          GET /healthz
//
// Errors come back as {"error": {"code": ..., "message": ...}} with 400 for
// bad requests, 404 for unknown authors, 409 for duplicate document ids and
// 503 while the engine is still loading.

#pragma once

#include <atomic>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "seerkit/engine.h"
#include "seerkit/error.h"

namespace httplib {
class Server;
}

namespace seerkit::service {

// Key-value config file: one `key = value` per line, '#' starts a comment.
// Keys: host, port, engine, cors_origin, persist_updates.
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string engine_dir;
  std::string cors_origin;       // empty disables CORS headers
  bool persist_updates = false;  // write POSTed batches back to engine_dir
};

ServiceConfig parse_config(std::istream& in);
ServiceConfig read_config(const std::string& path);

struct Reply {
  int status = 200;
  nlohmann::json body;
};

// HTTP status for an engine error.
int http_status(ErrorCode code);

class Service {
 public:
  explicit Service(ServiceConfig cfg);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Until an engine is set every request except /healthz answers 503.
  void set_engine(std::shared_ptr<Engine> engine);

  // Transport-free request handling; the HTTP layer is a thin shell over it.
  Reply handle_get(const std::string& path,
                   const std::multimap<std::string, std::string>& params) const;
  Reply handle_post(const std::string& path, const std::string& body);

  // Binds the socket and returns the port; then run() blocks serving until
  // stop() is called from another thread.
  int bind();
  void run();
  void stop();
  bool running() const;

 private:
  std::shared_ptr<Engine> engine() const;
  void install_routes();

  ServiceConfig cfg_;
  mutable std::mutex engine_mu_;
  std::shared_ptr<Engine> engine_;
  std::mutex post_mu_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace seerkit::service
