// Copyright 2026 The Lemotif Authors
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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "lemotif/config.hpp"

namespace lemotif {

inline constexpr std::size_t kMaxBodyBytes = 64 * 1024;

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

/// {"error": {"code", "message", "detail"?}}
ApiResponse api_error(int status, const std::string& code, const std::string& message,
                      const std::string& detail = {});

std::string base64_encode(std::string_view bytes);

/// Request handlers, independent of any socket. Thread-safe: they only read
/// the configuration and resources captured at construction.
class Api {
 public:
  Api(Config config, Resources resources);

  ApiResponse analyze(const std::string& body) const;
  /// `format` is the ?format= query value, if any.
  ApiResponse motif(const std::string& body, const std::string& format = {}) const;
  ApiResponse styles() const;

  const Config& config() const noexcept { return config_; }
  const Resources& resources() const noexcept { return resources_; }

 private:
  template <class F>
  ApiResponse guarded(F&& f) const;

  Config config_;
  Resources resources_;
};

/// True when `origin` equals an allow-list entry or extends it with ":<port>".
bool origin_allowed(const std::string& origin, const std::vector<std::string>& allowed);

/// HTTP front end over Api. Routes: POST /api/v1/analyze, POST /api/v1/motif,
/// GET /api/v1/styles, GET /healthz, plus the optional static mount at "/".
class HttpServer {
 public:
  explicit HttpServer(const Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Errc::address_in_use when taken.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Requires a prior bind().
  void serve();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lemotif
