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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lemotif/classify.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/palette.hpp"
#include "lemotif/render.hpp"
#include "lemotif/styles.hpp"

namespace lemotif {

inline constexpr Rgb kBackgroundColor{255, 255, 255};
inline constexpr Rgb kOutlineColor{64, 64, 64};
inline constexpr Rgb kLineColor{24, 24, 24};
inline constexpr Rgb kCaptionColor{32, 32, 32};

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct MotifRequest {
  StyleId style = StyleId::circle_packing;
  ShapeMask shape;
  std::vector<Rgb> colors;
  nlohmann::json params;  // overrides; defaults fill the rest
  std::uint64_t seed = kDefaultSeed;
};

// Everything a renderer placed, in draw order.
struct CircleRecord {
  double x = 0, y = 0, r = 0;
  Rgb color;
};

struct StrokeRecord {
  Point p0, p1, ctrl;
  int width = 0;
  Rgb color;
  int overlay_width = 0;
  Rgb overlay_color;
};

struct CellRecord {
  int row = 0, col = 0;
  int angle = 0;       // carpet: line angle in degrees
  std::string kind;    // tile: "/" or "\\"
};

struct IconRecord {
  Topic topic = Topic::exercise;
  int x = 0, y = 0, side = 0;
  Rgb color;
  int alpha = 255;
};

struct BandRecord {
  int x_begin = 0, x_end = 0;  // half-open column range
  Rgb color;
  std::size_t area = 0;
};

struct PrimitiveLog {
  std::vector<CircleRecord> circles;
  std::vector<StrokeRecord> strokes;
  std::vector<CellRecord> cells;
  std::vector<IconRecord> icons;
  std::vector<BandRecord> bands;
  std::size_t regions = 0;
};

nlohmann::json to_json(const PrimitiveLog& log);

struct Motif {
  Canvas image;
  std::string caption;
  PrimitiveLog log;
};

/// Square stand-in shape, built once per (size, radius) and shared.
const ShapeMask& shared_square_shape(int size, int radius);

/// White panel with the shape outline in kOutlineColor.
Canvas blank_panel(const ShapeMask& shape);

// Individual visualizers. Each throws Errc::empty_color_list on an empty
// color list and only ever writes inside shape.interior.
Motif circle_packing(const MotifRequest& req);
Motif string_doll(const MotifRequest& req);
Motif carpet(const MotifRequest& req);
Motif tile(const MotifRequest& req);
Motif glass(const MotifRequest& req, const ShapeLibrary& icons);
/// Interior split into |colors| vertical bands of (near) equal area.
Motif solid_bands(const MotifRequest& req);
/// Interior filled with colors[0].
Motif solid_fill(const MotifRequest& req);

/// Dispatches on req.style, substituting the square shape for the
/// square-shaped baselines. `icons` is only read by glass.
Motif render_motif(const MotifRequest& req, const ShapeLibrary& icons);

/// Palette colors for the (up to four) selected emotions, in label order.
std::vector<Rgb> emotion_colors(const LabelSet& labels, const Palette& palette);

/// Valence color for the majority over every emotion in `labels`. Throws
/// Errc::empty_color_list when there are no emotions at all.
Rgb valence_color(std::span<const LabelSet> labels, const Palette& palette);

/// Ablation baselines b1..b7. Colors and shape are derived from `labels`
/// (one label set, or the whole entry for b7) and `palette`; base.shape is the
/// topic shape for b3/b5.
Motif baseline(const MotifRequest& base, StyleId kind, std::span<const LabelSet> labels,
               const Palette& palette, const ShapeLibrary& icons);

}  // namespace lemotif
