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

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

#include "lemotif/domain.hpp"
#include "lemotif/raster.hpp"

namespace lemotif {

inline constexpr int kDefaultCanvasSize = 512;
inline constexpr int kDefaultDilationRadius = 2;
inline constexpr double kDefaultMargin = 0.9;
inline constexpr double kDefaultLeakFraction = 0.98;

/// Outline and filled region of a topic icon on a square canvas.
/// Invariants: outline is a subset of interior; interior is one 4-connected component.
struct ShapeMask {
  std::optional<Topic> topic;  // nullopt for the plain square used by baselines
  RasterMask outline;
  RasterMask interior;
  int canvas_size = kDefaultCanvasSize;
  int dilation_radius = kDefaultDilationRadius;
};

/// Foreground iff intensity < threshold. Throws Errc::empty_image.
RasterMask binarize(const GrayImage& gray, int threshold = 128);

/// Scales the foreground bounding box (nearest neighbour, aspect preserved) so
/// its longer side is floor(margin * size), centred on a size x size canvas.
/// Throws Errc::empty_mask.
RasterMask crop_recenter_resize(const RasterMask& m, int size, double margin = kDefaultMargin);

/// First and last foreground pixel of every row and every column.
/// Throws Errc::empty_mask.
RasterMask extreme_point_outline(const RasterMask& m);

/// Square structuring element of side 2 * radius + 1. Throws
/// Errc::invalid_argument when radius < 1.
RasterMask dilate(const RasterMask& m, int radius);

/// Everything not 4-reachable from the canvas border without crossing the
/// outline, plus the outline itself. Throws Errc::open_outline when the border
/// flood reaches at least `leak_fraction` of the non-outline pixels.
RasterMask fill_interior(const RasterMask& outline, double leak_fraction = kDefaultLeakFraction);

/// binarize -> crop_recenter_resize -> extreme_point_outline -> dilate ->
/// fill_interior. Stage failures are rethrown as "<stage>: <cause>".
ShapeMask build_shape(Topic topic, const GrayImage& icon, int size = kDefaultCanvasSize,
                      int dilation_radius = kDefaultDilationRadius, int threshold = 128);

/// Same pipeline starting from an already binary mask.
ShapeMask build_shape_from_mask(std::optional<Topic> topic, const RasterMask& mask,
                                int size = kDefaultCanvasSize,
                                int dilation_radius = kDefaultDilationRadius);

/// The square stand-in shape used by B1/B2/B4/B6/B7 and by the no-topic fallback.
ShapeMask square_shape(int size = kDefaultCanvasSize, int dilation_radius = kDefaultDilationRadius);

/// Per-topic shapes persisted as `<topic>.outline.pbm` / `<topic>.interior.pbm`
/// next to a `manifest.json`.
class ShapeLibrary {
 public:
  ShapeLibrary() = default;

  /// Throws Errc::shape_missing when the directory or its manifest is absent.
  static ShapeLibrary load(const std::filesystem::path& dir);
  void save(const std::filesystem::path& dir) const;

  void put(ShapeMask shape);
  bool has(Topic t) const noexcept { return shapes_[index(t)].has_value(); }
  /// Throws Errc::shape_missing.
  const ShapeMask& get(Topic t) const;
  std::vector<Topic> topics() const;
  std::size_t size() const noexcept;

  int canvas_size() const noexcept { return canvas_size_; }
  int dilation_radius() const noexcept { return dilation_radius_; }

 private:
  std::array<std::optional<ShapeMask>, kTopicCount> shapes_;
  int canvas_size_ = kDefaultCanvasSize;
  int dilation_radius_ = kDefaultDilationRadius;
};

}  // namespace lemotif
