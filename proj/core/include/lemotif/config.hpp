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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lemotif/classify.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/motifs.hpp"
#include "lemotif/palette.hpp"
#include "lemotif/styles.hpp"

namespace lemotif {

/// Bundled data directory: $LEMOTIF_DATA_DIR when set, else the build-time path.
std::filesystem::path default_data_dir();

struct Config {
  std::optional<std::filesystem::path> palette;  // default palette when unset
  std::filesystem::path lexicon;
  std::filesystem::path shapes_dir;
  StyleId style = StyleId::circle_packing;
  nlohmann::json params = nlohmann::json::object();
  double threshold = kDefaultThreshold;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path output_dir = ".";
  std::optional<std::string> remote_endpoint;  // lexicon backend when unset
  int remote_timeout_ms = 5000;
  std::vector<std::string> cors_origins{"http://localhost", "http://127.0.0.1"};
  std::optional<std::filesystem::path> static_dir;
};

Config default_config();

/// Relative paths resolve against `base_dir`. Unknown keys, a threshold outside
/// (0, 1), or invalid params raise Errc::invalid_argument naming the field.
Config config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
Config load_config(const std::filesystem::path& path);

/// Explicit path, else $LEMOTIF_CONFIG, else defaults.
Config resolve_config(const std::optional<std::filesystem::path>& explicit_path);

struct Resources {
  Palette palette;
  std::shared_ptr<const Classifier> classifier;
  ShapeLibrary shapes;
};

/// Loads palette and classifier. Shapes load only when `with_shapes` is set
/// (Errc::shape_missing if the directory is absent).
Resources load_resources(const Config& config, bool with_shapes = true);

}  // namespace lemotif
