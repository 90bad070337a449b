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
#include <cstdint>
#include <span>
#include <vector>

namespace lemotif {

/// 8-bit grayscale image, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 255)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  bool empty() const noexcept { return pixels.empty(); }
  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Row-major boolean grid; true is foreground.
class RasterMask {
 public:
  RasterMask() = default;
  RasterMask(int width, int height, bool fill = false);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return bits_.size(); }

  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool at(int x, int y) const noexcept { return bits_[offset(x, y)] != 0; }
  bool at(std::size_t i) const noexcept { return bits_[i] != 0; }
  /// Out-of-bounds reads are background.
  bool get(int x, int y) const noexcept { return in_bounds(x, y) && at(x, y); }
  void set(int x, int y, bool v = true) noexcept { bits_[offset(x, y)] = v ? 1 : 0; }
  void set(std::size_t i, bool v = true) noexcept { bits_[i] = v ? 1 : 0; }

  std::size_t offset(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool subset_of(const RasterMask& other) const noexcept;

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  RasterMask operator|(const RasterMask& o) const;
  RasterMask operator&(const RasterMask& o) const;
  RasterMask operator~() const;

  friend bool operator==(const RasterMask&, const RasterMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Filled axis-aligned square mask, useful for the shape-less baselines.
RasterMask square_mask(int size, int side);

/// Nearest-neighbour resample of `m` into a new w x h mask.
RasterMask resample_nearest(const RasterMask& m, int w, int h);

/// For every pixel, the squared Euclidean distance to the nearest background
/// pixel; everything outside the canvas counts as background.
std::vector<std::int64_t> squared_distance_to_background(const RasterMask& m);

/// Number of 4-connected foreground components.
std::size_t count_components4(const RasterMask& m);

}  // namespace lemotif
