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

#include "lemotif/render.hpp"

#include <algorithm>
#include <cmath>

#include "lemotif/error.hpp"

namespace lemotif {

Canvas::Canvas(int width, int height, Rgba fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
  if (width <= 0 || height <= 0)
    throw Error(Errc::invalid_argument, "canvas dimensions must be positive");
}

void Canvas::blit(const Canvas& src, int x0, int y0) {
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      if (in_bounds(x0 + x, y0 + y)) at(x0 + x, y0 + y) = src.at(x, y);
    }
  }
}

std::vector<Point> quad_bezier_points(Point p0, Point p1, Point ctrl, double step) {
  if (!(step > 0.0 && step <= 0.5))
    throw Error(Errc::bad_step, "bezier step must lie in (0, 0.5]");
  std::vector<Point> out;
  auto eval = [&](double t) {
    const double u = 1.0 - t;
    return Point{u * u * p0.x + 2.0 * u * t * ctrl.x + t * t * p1.x,
                 u * u * p0.y + 2.0 * u * t * ctrl.y + t * t * p1.y};
  };
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t >= 1.0 - 1e-12) break;
    out.push_back(eval(t));
  }
  out.push_back(p1);
  return out;
}

double bezier_step(Point p0, Point p1, Point ctrl) noexcept {
  const double len = std::hypot(ctrl.x - p0.x, ctrl.y - p0.y) + std::hypot(p1.x - ctrl.x, p1.y - ctrl.y);
  if (len <= 1.0) return 0.5;
  return std::min(0.5, 1.0 / (2.0 * len));
}

namespace {

void stamp_disc(Canvas& canvas, double cx, double cy, double radius, Rgb color,
                const RasterMask* clip) {
  const Rgba c = opaque(color);
  const double r2 = radius * radius;
  const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
  const int x1 = std::min(canvas.width() - 1, static_cast<int>(std::ceil(cx + radius)));
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
  const int y1 = std::min(canvas.height() - 1, static_cast<int>(std::ceil(cy + radius)));
  for (int y = y0; y <= y1; ++y) {
    const double dy = y - cy;
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - cx;
      if (dx * dx + dy * dy > r2) continue;
      if (clip && !clip->get(x, y)) continue;
      canvas.at(x, y) = c;
    }
  }
}

}  // namespace

void stroke_polyline(Canvas& canvas, std::span<const Point> points, double width, Rgb color,
                     const RasterMask* clip) {
  const double radius = std::max(width, 1.0) / 2.0;
  bool have_last = false;
  long long last_x = 0, last_y = 0;
  for (const Point& p : points) {
    const long long px = static_cast<long long>(std::floor(p.x + 0.5));
    const long long py = static_cast<long long>(std::floor(p.y + 0.5));
    if (have_last && px == last_x && py == last_y) continue;
    have_last = true;
    last_x = px;
    last_y = py;
    stamp_disc(canvas, static_cast<double>(px), static_cast<double>(py), radius, color, clip);
  }
}

void fill_circle(Canvas& canvas, Point center, double radius, Rgb color, const RasterMask* clip) {
  stamp_disc(canvas, center.x, center.y, radius, color, clip);
}

void fill_pixels(Canvas& canvas, std::span<const std::int32_t> region, Rgb color) {
  const Rgba c = opaque(color);
  for (std::int32_t i : region) canvas.at(static_cast<std::size_t>(i)) = c;
}

void fill_mask(Canvas& canvas, const RasterMask& mask, Rgb color) {
  const Rgba c = opaque(color);
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask.at(i)) canvas.at(i) = c;
}

std::vector<PixelSet> connected_regions(const RasterMask& mask, const RasterMask& barriers) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<std::uint8_t> open(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) open[i] = mask.at(i) && !barriers.at(i);

  std::vector<PixelSet> regions;
  std::vector<std::int32_t> stack;
  for (std::size_t start = 0; start < open.size(); ++start) {
    if (!open[start]) continue;
    PixelSet region;
    open[start] = 0;
    stack.push_back(static_cast<std::int32_t>(start));
    while (!stack.empty()) {
      const std::int32_t i = stack.back();
      stack.pop_back();
      region.push_back(i);
      const int x = i % w;
      const int y = i / w;
      if (x > 0 && open[i - 1]) { open[i - 1] = 0; stack.push_back(i - 1); }
      if (x + 1 < w && open[i + 1]) { open[i + 1] = 0; stack.push_back(i + 1); }
      if (y > 0 && open[i - w]) { open[i - w] = 0; stack.push_back(i - w); }
      if (y + 1 < h && open[i + w]) { open[i + w] = 0; stack.push_back(i + w); }
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

void composite_over(Canvas& canvas, Rgb color, std::uint8_t alpha,
                    std::span<const std::int32_t> region) {
  for (std::int32_t i : region) {
    Rgba& dst = canvas.at(static_cast<std::size_t>(i));
    dst.r = blend_channel(color.r, dst.r, alpha);
    dst.g = blend_channel(color.g, dst.g, alpha);
    dst.b = blend_channel(color.b, dst.b, alpha);
    dst.a = blend_channel(255, dst.a, alpha);
  }
}

Rgb lighten_darken(Rgb color, double factor) noexcept {
  const double f = std::clamp(factor, -1.0, 1.0);
  auto channel = [f](std::uint8_t c) {
    const double v = f >= 0.0 ? c + (255.0 - c) * f : c * (1.0 + f);
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
  };
  return {channel(color.r), channel(color.g), channel(color.b)};
}

}  // namespace lemotif
