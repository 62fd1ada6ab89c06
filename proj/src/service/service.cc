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

#include "service/service.h"

#include <charconv>
#include <chrono>
#include <fstream>

#include <httplib.h>

#include "seerkit/api.h"
#include "seerkit/error.h"

namespace seerkit::service {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_bool(const std::string& v, bool* out) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") {
    *out = true;
    return true;
  }
  if (v == "false" || v == "0" || v == "no" || v == "off") {
    *out = false;
    return true;
  }
  return false;
}

Reply error_reply(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

Reply error_reply(const Error& e) {
  return error_reply(http_status(e.code()), error_code_name(e.code()), e.what());
}

std::optional<std::string> param(const std::multimap<std::string, std::string>& params,
                                 const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

size_t parse_k(const std::multimap<std::string, std::string>& params) {
  auto raw = param(params, "k");
  if (!raw) return 10;
  long long k = 0;
  const char* end = raw->data() + raw->size();
  auto [ptr, ec] = std::from_chars(raw->data(), end, k);
  if (ec != std::errc() || ptr != end || k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be a positive integer");
  }
  return static_cast<size_t>(k);
}

}  // namespace

ServiceConfig parse_config(std::istream& in) {
  ServiceConfig cfg;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "host") {
      cfg.host = value;
    } else if (key == "port") {
      int port = -1;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), port);
      if (ec != std::errc() || ptr != value.data() + value.size() || port < 0 ||
          port > 65535) {
        throw Error(ErrorCode::kConfig, "config: bad port '" + value + "'");
      }
      cfg.port = port;
    } else if (key == "engine") {
      cfg.engine_dir = value;
    } else if (key == "cors_origin") {
      cfg.cors_origin = value;
    } else if (key == "persist_updates") {
      if (!parse_bool(value, &cfg.persist_updates)) {
        throw Error(ErrorCode::kConfig, "config: bad boolean '" + value + "'");
      }
    } else {
      throw Error(ErrorCode::kConfig, "config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

ServiceConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config '" + path + "'");
  return parse_config(in);
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kDuplicate:
      return 409;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotInLexicon:
    case ErrorCode::kEmptyModel:
    case ErrorCode::kParse:
    case ErrorCode::kUnusableName:
      return 400;
    case ErrorCode::kIo:
    case ErrorCode::kConfig:
    case ErrorCode::kAlreadyExists:
      return 500;
  }
  return 500;
}

Service::Service(ServiceConfig cfg) : cfg_(std::move(cfg)) {}

Service::~Service() { stop(); }

void Service::set_engine(std::shared_ptr<Engine> engine) {
  std::lock_guard lock(engine_mu_);
  engine_ = std::move(engine);
}

std::shared_ptr<Engine> Service::engine() const {
  std::lock_guard lock(engine_mu_);
  return engine_;
}

Reply Service::handle_get(const std::string& path,
                          const std::multimap<std::string, std::string>& params) const {
  auto eng = engine();
  if (path == "/healthz") {
    if (!eng) return {503, {{"status", "loading"}}};
    auto snap = eng->snapshot();
    return {200,
            {{"status", "ok"},
             {"documents", snap->corpus().size()},
             {"authors", snap->corpus().author_count()},
             {"lexicon_size", snap->lexicon().size()}}};
  }
  if (path != "/experts" && path != "/expertise" && path != "/related") {
    return error_reply(404, "not_found", "no such endpoint: " + path);
  }
  if (!eng) return error_reply(503, "loading", "engine is loading");
  const auto start = std::chrono::steady_clock::now();
  try {
    const size_t k = parse_k(params);
    auto snap = eng->snapshot();
    nlohmann::json body;
    if (path == "/expertise") {
      auto author = param(params, "author");
      if (!author || trim(*author).empty()) {
        throw Error(ErrorCode::kInvalidArgument, "missing author parameter");
      }
      body = api::expertise_response(*snap, *author, k);
    } else {
      auto q = param(params, "q");
      if (!q) throw Error(ErrorCode::kInvalidArgument, "missing q parameter");
      body = path == "/experts" ? api::experts_response(*snap, *q, k)
                                : api::related_response(*snap, *q, k);
    }
    body["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return {200, std::move(body)};
  } catch (const Error& e) {
    return error_reply(e);
  }
}

Reply Service::handle_post(const std::string& path, const std::string& body) {
  if (path != "/documents") return error_reply(404, "not_found", "no such endpoint: " + path);
  auto eng = engine();
  if (!eng) return error_reply(503, "loading", "engine is loading");
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return error_reply(400, error_code_name(ErrorCode::kParse),
                       std::string("invalid JSON: ") + e.what());
  }
  try {
    std::lock_guard lock(post_mu_);
    UpdateSummary summary = eng->add_documents(api::parse_document_batch(parsed));
    if (cfg_.persist_updates && !cfg_.engine_dir.empty()) {
      eng->save(cfg_.engine_dir, true);
    }
    return {200, to_json(summary)};
  } catch (const Error& e) {
    return error_reply(e);
  }
}

void Service::install_routes() {
  auto& srv = *server_;
  const std::string origin = cfg_.cors_origin;
  auto send = [origin](httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    if (!origin.empty()) res.set_header("Access-Control-Allow-Origin", origin);
    res.set_content(reply.body.dump(), "application/json");
  };
  auto get = [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_get(req.path, req.params));
  };
  for (const char* p : {"/healthz", "/experts", "/expertise", "/related"}) srv.Get(p, get);
  srv.Post("/documents", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_post(req.path, req.body));
  });
  srv.Options(".*", [origin](const httplib::Request&, httplib::Response& res) {
    if (!origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    res.status = 204;
  });
  srv.set_error_handler([send](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    send(res, error_reply(res.status, res.status == 404 ? "not_found" : "http_error",
                          "cannot serve " + req.method + " " + req.path));
  });
}

int Service::bind() {
  server_ = std::make_unique<httplib::Server>();
  install_routes();
  if (cfg_.port == 0) {
    const int port = server_->bind_to_any_port(cfg_.host);
    if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + cfg_.host);
    return port;
  }
  if (!server_->bind_to_port(cfg_.host, cfg_.port)) {
    throw Error(ErrorCode::kIo,
                "cannot bind " + cfg_.host + ":" + std::to_string(cfg_.port));
  }
  return cfg_.port;
}

void Service::run() {
  if (!server_) bind();
  server_->listen_after_bind();
}

void Service::stop() {
  if (server_) server_->stop();
}

bool Service::running() const { return server_ && server_->is_running(); }

}  // namespace seerkit::service
