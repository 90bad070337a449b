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

#include "lemotif/raster.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lemotif {

RasterMask::RasterMask(int width, int height, bool fill)
    : width_(width),
      height_(height),
      bits_(static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)),
            fill ? 1 : 0) {
  if (width < 0 || height < 0) throw std::invalid_argument("RasterMask: negative dimension");
}

std::size_t RasterMask::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool RasterMask::any() const noexcept {
  return std::find(bits_.begin(), bits_.end(), std::uint8_t{1}) != bits_.end();
}

bool RasterMask::subset_of(const RasterMask& other) const noexcept {
  if (width_ != other.width_ || height_ != other.height_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

RasterMask RasterMask::operator|(const RasterMask& o) const {
  assert(width_ == o.width_ && height_ == o.height_);
  RasterMask r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
  return r;
}

RasterMask RasterMask::operator&(const RasterMask& o) const {
  assert(width_ == o.width_ && height_ == o.height_);
  RasterMask r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
  return r;
}

RasterMask RasterMask::operator~() const {
  RasterMask r = *this;
  for (auto& b : r.bits_) b ^= 1;
  return r;
}

RasterMask square_mask(int size, int side) {
  RasterMask m(size, size);
  const int x0 = (size - side) / 2;
  for (int y = x0; y < x0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) m.set(x, y);
  return m;
}

RasterMask resample_nearest(const RasterMask& m, int w, int h) {
  RasterMask out(w, h);
  if (m.width() == 0 || m.height() == 0) return out;
  for (int y = 0; y < h; ++y) {
    const int sy = static_cast<int>(static_cast<long long>(y) * m.height() / h);
    for (int x = 0; x < w; ++x) {
      const int sx = static_cast<int>(static_cast<long long>(x) * m.width() / w);
      if (m.at(sx, sy)) out.set(x, y);
    }
  }
  return out;
}

namespace {

// Lower envelope of parabolas (Felzenszwalb & Huttenlocher), one line at a time.
void distance_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
                 std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  auto intersect = [&](int q, int p) {
    return ((f[q] + static_cast<double>(q) * q) - (f[p] + static_cast<double>(p) * p)) /
           (2.0 * (q - p));
  };
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s = intersect(q, v[k]);
    while (s <= z[k]) {
      --k;
      s = intersect(q, v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

std::vector<std::int64_t> squared_distance_to_background(const RasterMask& m) {
  // Pad by one background pixel on every side.
  const int w = m.width() + 2;
  const int h = m.height() + 2;
  const double inf = 1e18;
  std::vector<double> grid(static_cast<std::size_t>(w) * h, 0.0);
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      if (m.at(x, y)) grid[static_cast<std::size_t>(y + 1) * w + x + 1] = inf;

  const int n = std::max(w, h);
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);
  for (int x = 0; x < w; ++x) {
    f.resize(h);
    d.resize(h);
    for (int y = 0; y < h; ++y) f[y] = grid[static_cast<std::size_t>(y) * w + x];
    distance_1d(f, d, v, z);
    for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = d[y];
  }
  for (int y = 0; y < h; ++y) {
    f.resize(w);
    d.resize(w);
    for (int x = 0; x < w; ++x) f[x] = grid[static_cast<std::size_t>(y) * w + x];
    distance_1d(f, d, v, z);
    for (int x = 0; x < w; ++x) grid[static_cast<std::size_t>(y) * w + x] = d[x];
  }
  std::vector<std::int64_t> out(m.size());
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      out[m.offset(x, y)] =
          static_cast<std::int64_t>(std::llround(grid[static_cast<std::size_t>(y + 1) * w + x + 1]));
  return out;
}

std::size_t count_components4(const RasterMask& m) {
  std::vector<std::uint8_t> seen(m.size(), 0);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  const int w = m.width();
  for (std::size_t start = 0; start < m.size(); ++start) {
    if (!m.at(start) || seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int x = static_cast<int>(i % w);
      const int y = static_cast<int>(i / w);
      const int nx[4] = {x - 1, x + 1, x, x};
      const int ny[4] = {y, y, y - 1, y + 1};
      for (int k = 0; k < 4; ++k) {
        if (!m.get(nx[k], ny[k])) continue;
        const std::size_t j = m.offset(nx[k], ny[k]);
        if (seen[j]) continue;
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return components;
}

}  // namespace lemotif
