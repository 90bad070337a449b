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
#include <span>
#include <vector>

#include "lemotif/domain.hpp"
#include "lemotif/raster.hpp"

namespace lemotif {

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  constexpr Rgb rgb() const noexcept { return {r, g, b}; }
  friend constexpr bool operator==(const Rgba&, const Rgba&) = default;
};

constexpr Rgba opaque(Rgb c) noexcept { return {c.r, c.g, c.b, 255}; }

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

/// Straight-alpha RGBA raster, row-major.
class Canvas {
 public:
  Canvas() = default;
  Canvas(int width, int height, Rgba fill = {255, 255, 255, 255});

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  std::size_t offset(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  const Rgba& at(int x, int y) const noexcept { return pixels_[offset(x, y)]; }
  Rgba& at(int x, int y) noexcept { return pixels_[offset(x, y)]; }
  const Rgba& at(std::size_t i) const noexcept { return pixels_[i]; }
  Rgba& at(std::size_t i) noexcept { return pixels_[i]; }

  std::span<const Rgba> pixels() const noexcept { return pixels_; }

  /// Copies `src` with its top-left corner at (x0, y0), clipped to this canvas.
  void blit(const Canvas& src, int x0, int y0);

  friend bool operator==(const Canvas&, const Canvas&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Rgba> pixels_;
};

/// Linear pixel indices (y * width + x).
using PixelSet = std::vector<std::int32_t>;

/// B(t) for t = 0, step, 2*step, ... and finally t = 1. Throws Errc::bad_step
/// unless 0 < step <= 0.5.
std::vector<Point> quad_bezier_points(Point p0, Point p1, Point ctrl, double step);

/// Sampling step of 1 / (2 * control-polygon length), capped at 0.5.
double bezier_step(Point p0, Point p1, Point ctrl) noexcept;

/// Stamps a disc of diameter `width` at every point (rounded to the nearest
/// pixel). Pixels outside `clip` are never written; a null clip means no clipping.
void stroke_polyline(Canvas& canvas, std::span<const Point> points, double width, Rgb color,
                     const RasterMask* clip = nullptr);

/// Sets every pixel whose centre lies within `radius` of `center`.
void fill_circle(Canvas& canvas, Point center, double radius, Rgb color,
                 const RasterMask* clip = nullptr);

void fill_pixels(Canvas& canvas, std::span<const std::int32_t> region, Rgb color);
void fill_mask(Canvas& canvas, const RasterMask& mask, Rgb color);

/// 4-connected components of (mask AND NOT barriers), ordered by their smallest
/// row-major pixel index. Pixels inside each set are in discovery order.
std::vector<PixelSet> connected_regions(const RasterMask& mask, const RasterMask& barriers);

/// round_half_up(src * a + dst * (1 - a)) with a = alpha / 255.
constexpr std::uint8_t blend_channel(std::uint8_t src, std::uint8_t dst, std::uint8_t alpha) noexcept {
  const int num = src * alpha + dst * (255 - alpha);
  return static_cast<std::uint8_t>((2 * num + 255) / 510);
}

/// Source-over with straight alpha on every pixel of `region`.
void composite_over(Canvas& canvas, Rgb color, std::uint8_t alpha,
                    std::span<const std::int32_t> region);

/// factor > 0 moves toward white by `factor`, factor < 0 toward black by |factor|.
Rgb lighten_darken(Rgb color, double factor) noexcept;

}  // namespace lemotif
