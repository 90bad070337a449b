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

#include "lemotif/config.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "lemotif/error.hpp"
#include "lemotif/remote.hpp"

#ifndef LEMOTIF_DATA_DIR
#define LEMOTIF_DATA_DIR "data"
#endif

namespace lemotif {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw Error(Errc::invalid_argument, field + ": " + msg, field);
}

fs::path resolve(const fs::path& base, const json& v, const std::string& field) {
  if (!v.is_string()) bad(field, "expected a path string");
  fs::path p = v.get<std::string>();
  if (p.is_relative()) p = base / p;
  if (!fs::exists(p)) bad(field, "path does not exist: " + p.string());
  return p;
}

}  // namespace

fs::path default_data_dir() {
  if (const char* env = std::getenv("LEMOTIF_DATA_DIR"); env && *env) return env;
  return LEMOTIF_DATA_DIR;
}

Config default_config() {
  Config c;
  c.lexicon = default_data_dir() / "lexicon.json";
  c.shapes_dir = default_data_dir() / "shapes";
  return c;
}

Config config_from_json(const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) bad("config", "expected an object");
  Config c = default_config();
  for (const auto& [key, v] : doc.items()) {
    if (key == "palette") {
      c.palette = resolve(base_dir, v, key);
    } else if (key == "lexicon") {
      c.lexicon = resolve(base_dir, v, key);
    } else if (key == "shapes_dir") {
      c.shapes_dir = resolve(base_dir, v, key);
    } else if (key == "static_dir") {
      c.static_dir = resolve(base_dir, v, key);
    } else if (key == "output_dir") {
      if (!v.is_string()) bad(key, "expected a path string");
      c.output_dir = v.get<std::string>();
      if (c.output_dir.is_relative()) c.output_dir = base_dir / c.output_dir;
    } else if (key == "style") {
      const auto s = v.is_string() ? parse_style(v.get<std::string>()) : std::nullopt;
      if (!s) bad(key, "unknown style");
      c.style = *s;
    } else if (key == "params") {
      if (!v.is_object()) bad(key, "expected an object");
      c.params = v;
    } else if (key == "threshold") {
      if (!v.is_number()) bad(key, "expected a number");
      c.threshold = v.get<double>();
      if (!(c.threshold > 0.0 && c.threshold < 1.0)) bad(key, "must lie in (0, 1)");
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) bad(key, "expected a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "remote_endpoint") {
      if (!v.is_string()) bad(key, "expected a URL string");
      c.remote_endpoint = v.get<std::string>();
    } else if (key == "remote_timeout_ms") {
      if (!v.is_number_integer() || v.get<long long>() <= 0) bad(key, "expected a positive integer");
      c.remote_timeout_ms = v.get<int>();
    } else if (key == "cors_origins") {
      if (!v.is_array()) bad(key, "expected an array of origins");
      c.cors_origins.clear();
      for (const auto& o : v) {
        if (!o.is_string()) bad(key, "expected an array of origins");
        c.cors_origins.push_back(o.get<std::string>());
      }
    } else {
      bad(key, "unknown config key");
    }
  }
  try {
    resolve_params(c.style, c.params);
  } catch (const Error& e) {
    throw Error(Errc::invalid_argument, std::string("config ") + e.what(), e.detail());
  }
  return c;
}

Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open config " + path.string(), "config");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, "config " + path.string() + ": " + e.what(), "config");
  }
  return config_from_json(doc, fs::absolute(path).parent_path());
}

Config resolve_config(const std::optional<fs::path>& explicit_path) {
  if (explicit_path) return load_config(*explicit_path);
  if (const char* env = std::getenv("LEMOTIF_CONFIG"); env && *env) return load_config(env);
  return default_config();
}

Resources load_resources(const Config& config, bool with_shapes) {
  Resources r;
  r.palette = config.palette ? load_palette(*config.palette) : default_palette();
  if (config.remote_endpoint) {
    r.classifier = std::make_shared<RemoteClassifier>(
        *config.remote_endpoint, std::chrono::milliseconds(config.remote_timeout_ms));
  } else {
    r.classifier = std::make_shared<LexiconClassifier>(Lexicon::load(config.lexicon));
  }
  if (with_shapes) r.shapes = ShapeLibrary::load(config.shapes_dir);
  return r;
}

}  // namespace lemotif
