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

#include "lemotif/service.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <random>

#include <httplib.h>

#include "lemotif/compose.hpp"
#include "lemotif/error.hpp"
#include "lemotif/image_io.hpp"
#include "lemotif/rng.hpp"
#include "lemotif/schema.hpp"

namespace lemotif {

using nlohmann::json;

namespace {

[[noreturn]] void bad_request(const std::string& field, const std::string& msg) {
  throw Error(Errc::parse_error, field + ": " + msg, field);
}

json parse_body(const std::string& body, std::initializer_list<std::string_view> allowed) {
  if (body.size() > kMaxBodyBytes) {
    bad_request("body", "exceeds " + std::to_string(kMaxBodyBytes) + " bytes");
  }
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) bad_request("body", "invalid JSON");
  if (!doc.is_object()) bad_request("body", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      bad_request(key, "unknown field");
    }
  }
  return doc;
}

double read_threshold(const json& doc, double fallback) {
  if (!doc.contains("threshold")) return fallback;
  const auto& v = doc["threshold"];
  if (!v.is_number()) bad_request("threshold", "expected a number");
  const double t = v.get<double>();
  if (!(t > 0.0 && t < 1.0)) bad_request("threshold", "must lie in (0, 1)");
  return t;
}

Entry read_entry(const json& doc) {
  const bool has_text = doc.contains("text");
  const bool has_entry = doc.contains("entry");
  if (has_text && has_entry) bad_request("body", "give either text or entry, not both");
  if (has_entry) return entry_from_json(doc["entry"], "entry");
  if (!doc["text"].is_string()) bad_request("text", "expected a string");
  return entry_from_text(doc["text"].get<std::string>());
}

std::uint64_t read_seed(const json& v, std::uint64_t fallback) {
  if (v.is_null()) return fallback;
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return out;
  }
  bad_request("seed", "expected a non-negative 64-bit integer or decimal string");
}

std::string error_id() {
  static std::atomic<std::uint64_t> counter{std::random_device{}()};
  std::uint64_t state = counter.fetch_add(1);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(splitmix64(state)));
  return buf;
}

ApiResponse map_error(const Error& e) {
  switch (e.code()) {
    case Errc::unsupported_style:
      return api_error(400, "unsupported_style", e.what(), e.detail());
    case Errc::timeout:
    case Errc::remote_error:
    case Errc::malformed_response:
      return api_error(502, "backend_unavailable", e.what(), e.detail());
    case Errc::shape_missing:
      return api_error(500, "shape_missing", e.what(), e.detail());
    case Errc::io_error:
    case Errc::address_in_use: {
      const std::string id = error_id();
      std::cerr << "internal error " << id << ": " << e.what() << '\n';
      return api_error(500, "internal", "internal error " + id);
    }
    default:
      return api_error(400, "bad_request", e.what(), e.detail());
  }
}

}  // namespace

ApiResponse api_error(int status, const std::string& code, const std::string& message,
                      const std::string& detail) {
  json err = {{"code", code}, {"message", message}};
  if (!detail.empty()) err["detail"] = detail;
  return {status, "application/json", json{{"error", err}}.dump(), {}};
}

std::string base64_encode(std::string_view bytes) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const auto v = static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[i])) << 16 |
                   static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[i + 1])) << 8 |
                   static_cast<std::uint8_t>(bytes[i + 2]);
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += kAlphabet[v >> 6 & 63];
    out += kAlphabet[v & 63];
  }
  if (const std::size_t rest = bytes.size() - i; rest > 0) {
    std::uint32_t v = static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[i])) << 16;
    if (rest == 2) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[i + 1])) << 8;
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += rest == 2 ? kAlphabet[v >> 6 & 63] : '=';
    out += '=';
  }
  return out;
}

bool origin_allowed(const std::string& origin, const std::vector<std::string>& allowed) {
  for (const auto& a : allowed) {
    if (a == "*" || origin == a) return true;
    if (origin.size() > a.size() + 1 && origin.compare(0, a.size(), a) == 0 &&
        origin[a.size()] == ':') {
      return true;
    }
  }
  return false;
}

Api::Api(Config config, Resources resources)
    : config_(std::move(config)), resources_(std::move(resources)) {}

template <class F>
ApiResponse Api::guarded(F&& f) const {
  try {
    return f();
  } catch (const Error& e) {
    return map_error(e);
  } catch (const json::exception& e) {
    return api_error(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    const std::string id = error_id();
    std::cerr << "internal error " << id << ": " << e.what() << '\n';
    return api_error(500, "internal", "internal error " + id);
  }
}

ApiResponse Api::analyze(const std::string& body) const {
  return guarded([&] {
    const json doc = parse_body(body, {"text", "entry", "threshold"});
    if (!doc.contains("text") && !doc.contains("entry")) bad_request("body", "text or entry is required");
    const double threshold = read_threshold(doc, config_.threshold);
    const Entry entry = read_entry(doc);
    const auto results = analyze_entry(entry, *resources_.classifier, threshold);
    json label_sets = json::array();
    json probs = json::array();
    for (const auto& r : results) {
      label_sets.push_back(to_json(r.labels));
      probs.push_back(to_json(r.probs));
    }
    json out = {{"label_sets", label_sets},
                {"probs", probs},
                {"threshold", threshold},
                {"backend", resources_.classifier->backend()}};
    return ApiResponse{200, "application/json", out.dump(), {}};
  });
}

ApiResponse Api::motif(const std::string& body, const std::string& format_query) const {
  return guarded([&] {
    const json doc = parse_body(
        body, {"label_sets", "text", "entry", "style", "params", "seed", "captions", "format", "threshold"});

    EntryOptions options;
    options.style = config_.style;
    options.params = config_.params;
    options.seed = config_.seed;
    if (doc.contains("style")) {
      const auto& s = doc["style"];
      const auto id = s.is_string() ? parse_style(s.get<std::string>()) : std::nullopt;
      if (!id) {
        throw Error(Errc::unsupported_style,
                    "style: '" + (s.is_string() ? s.get<std::string>() : s.dump()) + "' is not supported",
                    "style");
      }
      options.style = *id;
      options.params = json::object();
    }
    if (doc.contains("params")) {
      if (!doc["params"].is_object()) bad_request("params", "expected an object");
      options.params = doc["params"];
    }
    if (doc.contains("seed")) options.seed = read_seed(doc["seed"], config_.seed);
    if (doc.contains("captions")) {
      if (!doc["captions"].is_boolean()) bad_request("captions", "expected a boolean");
      options.captions = doc["captions"].get<bool>();
    }
    std::string format = format_query.empty() ? "png" : format_query;
    if (doc.contains("format")) {
      if (!doc["format"].is_string()) bad_request("format", "expected \"png\" or \"json\"");
      format = doc["format"].get<std::string>();
    }
    if (format != "png" && format != "json") bad_request("format", "expected \"png\" or \"json\"");

    const int sources = static_cast<int>(doc.contains("label_sets")) +
                        static_cast<int>(doc.contains("text")) + static_cast<int>(doc.contains("entry"));
    if (sources != 1) bad_request("body", "give exactly one of label_sets, text, or entry");

    std::vector<LabelSet> label_sets;
    if (doc.contains("label_sets")) {
      const auto& ls = doc["label_sets"];
      if (!ls.is_array() || ls.empty() || ls.size() > kMaxSubEntries) {
        bad_request("label_sets", "expected an array of 1 to 3 label sets");
      }
      for (std::size_t i = 0; i < ls.size(); ++i) {
        label_sets.push_back(label_set_from_json(ls[i], "label_sets[" + std::to_string(i) + "]"));
      }
    } else {
      const double threshold = read_threshold(doc, config_.threshold);
      label_sets = classify_entry(read_entry(doc), *resources_.classifier, threshold);
    }

    const EntryRender render = render_entry(label_sets, options, resources_.shapes, resources_.palette);
    const Bytes png = encode_png(render.image);
    ApiResponse out;
    out.headers["X-Motif-Seed"] = std::to_string(options.seed);
    if (format == "json") {
      const json payload = {
          {"png_base64", base64_encode({reinterpret_cast<const char*>(png.data()), png.size()})},
          {"sidecar", sidecar_json(render, label_sets, options)}};
      out.body = payload.dump();
    } else {
      out.content_type = "image/png";
      out.body.assign(png.begin(), png.end());
    }
    return out;
  });
}

ApiResponse Api::styles() const {
  return ApiResponse{200, "application/json", registry_json().dump(), {}};
}

// ---------------------------------------------------------------------------

struct HttpServer::Impl {
  const Api& api;
  httplib::Server server;
  bool bound = false;

  explicit Impl(const Api& a) : api(a) {}

  static void apply(const ApiResponse& r, httplib::Response& res) {
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, r.content_type);
  }
};

HttpServer::HttpServer(const Api& api) : impl_(std::make_unique<Impl>(api)) {
  auto& svr = impl_->server;
  const Api* a = &api;
  svr.set_payload_max_length(kMaxBodyBytes * 16);
  // httplib's default adds SO_REUSEPORT, which lets a second server share a busy port.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
  });

  svr.Post("/api/v1/analyze", [a](const httplib::Request& req, httplib::Response& res) {
    Impl::apply(a->analyze(req.body), res);
  });
  svr.Post("/api/v1/motif", [a](const httplib::Request& req, httplib::Response& res) {
    Impl::apply(a->motif(req.body, req.get_param_value("format")), res);
  });
  svr.Get("/api/v1/styles", [a](const httplib::Request&, httplib::Response& res) {
    Impl::apply(a->styles(), res);
  });
  svr.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  svr.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  svr.set_post_routing_handler([a](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (origin.empty() || !origin_allowed(origin, a->config().cors_origins)) return;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Vary", "Origin");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Expose-Headers", "X-Motif-Seed");
  });
  svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    Impl::apply(api_error(500, "internal", "internal error " + error_id()), res);
  });
  if (api.config().static_dir) svr.set_mount_point("/", api.config().static_dir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound_port = port;
  if (port == 0) {
    bound_port = impl_->server.bind_to_any_port(host);
    if (bound_port < 0) bound_port = 0;
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound_port = 0;
  }
  if (bound_port <= 0) {
    throw Error(Errc::address_in_use, "cannot bind " + host + ":" + std::to_string(port), "port");
  }
  impl_->bound = true;
  return bound_port;
}

void HttpServer::serve() {
  if (!impl_->bound) throw Error(Errc::invalid_argument, "serve() before bind()");
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace lemotif
