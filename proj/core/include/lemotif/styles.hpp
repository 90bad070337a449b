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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace lemotif {

enum class StyleId {
  circle_packing, string_doll, carpet, tile, glass,
  b1, b2, b3, b4, b5, b6, b7,
};

std::string_view name(StyleId s) noexcept;
std::optional<StyleId> parse_style(std::string_view s) noexcept;

enum class ParamType { integer, real, integer_list, real_list };

std::string_view name(ParamType t) noexcept;

/// One tunable style parameter. List types bound every element by [min, max]
/// and their length by [min_items, max_items].
struct ParamSpec {
  std::string name;
  ParamType type = ParamType::integer;
  double min = 0.0;
  double max = 0.0;
  nlohmann::json default_value;
  std::string description;
  std::size_t min_items = 1;
  std::size_t max_items = 8;
};

struct StyleInfo {
  StyleId id;
  std::string description;
  std::vector<ParamSpec> params;
  bool square_shape = false;   // renders on the square stand-in instead of the topic icon
  bool valence_colors = false;  // one red/yellow/green color instead of emotion colors
  bool whole_entry = false;     // a single panel for the whole entry (B7)
};

const std::vector<StyleInfo>& style_registry();
const StyleInfo& style_info(StyleId id);

/// Merges `overrides` (an object, or null for none) into the style's defaults
/// and validates every field. Throws Errc::invalid_argument with detail
/// "params.<field>" on unknown fields, wrong types, or out-of-range values.
nlohmann::json resolve_params(StyleId id, const nlohmann::json& overrides);

/// The registry as served by GET /api/v1/styles.
nlohmann::json registry_json();

struct CirclePackingParams {
  std::vector<double> radii;
  std::vector<int> counts;
  int max_trials = 500;
  static CirclePackingParams from_json(const nlohmann::json& resolved);
};

struct StringDollParams {
  int n_strokes = 60;
  int w_min = 4;
  int w_max = 10;
  double sigma_frac = 0.2;
  static StringDollParams from_json(const nlohmann::json& resolved);
};

struct CarpetParams {
  int grid = 4;
  std::vector<int> angles;
  int spacing = 12;
  int thickness = 2;
  static CarpetParams from_json(const nlohmann::json& resolved);
};

struct TileParams {
  int grid = 8;
  double p_diag = 0.5;
  int line_width = 2;
  static TileParams from_json(const nlohmann::json& resolved);
};

struct GlassParams {
  int passes = 3;
  int icons_per_pass = 12;
  double scale_min = 0.15;
  double scale_max = 0.45;
  int alpha_min = 80;
  int alpha_max = 180;
  static GlassParams from_json(const nlohmann::json& resolved);
};

}  // namespace lemotif
