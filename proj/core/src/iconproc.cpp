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

#include "lemotif/iconproc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "lemotif/error.hpp"
#include "lemotif/image_io.hpp"

namespace lemotif {

RasterMask binarize(const GrayImage& gray, int threshold) {
  if (gray.width <= 0 || gray.height <= 0 || gray.pixels.empty())
    throw Error(Errc::empty_image, "EmptyImage: icon has no pixels");
  RasterMask m(gray.width, gray.height);
  for (std::size_t i = 0; i < gray.pixels.size(); ++i)
    if (gray.pixels[i] < threshold) m.set(i);
  return m;
}

RasterMask crop_recenter_resize(const RasterMask& m, int size, double margin) {
  if (size <= 0) throw Error(Errc::invalid_argument, "canvas size must be positive");
  int x0 = m.width(), y0 = m.height(), x1 = -1, y1 = -1;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 < 0) throw Error(Errc::empty_mask, "EmptyMask: no foreground pixels");

  const long long bw = x1 - x0 + 1;
  const long long bh = y1 - y0 + 1;
  const long long target = std::max(1LL, static_cast<long long>(std::floor(margin * size)));
  const long long longest = std::max(bw, bh);
  const int nw = static_cast<int>(std::max(1LL, bw * target / longest));
  const int nh = static_cast<int>(std::max(1LL, bh * target / longest));
  const int ox = (size - nw) / 2;
  const int oy = (size - nh) / 2;

  RasterMask out(size, size);
  for (int j = 0; j < nh; ++j) {
    const int sy = y0 + static_cast<int>(j * bh / nh);
    for (int i = 0; i < nw; ++i) {
      const int sx = x0 + static_cast<int>(i * bw / nw);
      if (m.at(sx, sy) && out.in_bounds(ox + i, oy + j)) out.set(ox + i, oy + j);
    }
  }
  return out;
}

RasterMask extreme_point_outline(const RasterMask& m) {
  if (!m.any()) throw Error(Errc::empty_mask, "EmptyMask: no foreground pixels");
  const int w = m.width();
  const int h = m.height();
  RasterMask out(w, h);
  for (int y = 0; y < h; ++y) {
    int first = -1, last = -1;
    for (int x = 0; x < w; ++x) {
      if (!m.at(x, y)) continue;
      if (first < 0) first = x;
      last = x;
    }
    if (first >= 0) {
      out.set(first, y);
      out.set(last, y);
    }
  }
  for (int x = 0; x < w; ++x) {
    int first = -1, last = -1;
    for (int y = 0; y < h; ++y) {
      if (!m.at(x, y)) continue;
      if (first < 0) first = y;
      last = y;
    }
    if (first >= 0) {
      out.set(x, first);
      out.set(x, last);
    }
  }
  return out;
}

RasterMask dilate(const RasterMask& m, int radius) {
  if (radius < 1) throw Error(Errc::invalid_argument, "dilation radius must be >= 1");
  const int w = m.width();
  const int h = m.height();
  // Separable: a square element is a horizontal pass followed by a vertical one.
  std::vector<int> prefix(static_cast<std::size_t>(std::max(w, h)) + 1);
  RasterMask horizontal(w, h);
  for (int y = 0; y < h; ++y) {
    prefix[0] = 0;
    for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + (m.at(x, y) ? 1 : 0);
    for (int x = 0; x < w; ++x) {
      const int lo = std::max(0, x - radius);
      const int hi = std::min(w, x + radius + 1);
      if (prefix[hi] - prefix[lo] > 0) horizontal.set(x, y);
    }
  }
  RasterMask out(w, h);
  for (int x = 0; x < w; ++x) {
    prefix[0] = 0;
    for (int y = 0; y < h; ++y) prefix[y + 1] = prefix[y] + (horizontal.at(x, y) ? 1 : 0);
    for (int y = 0; y < h; ++y) {
      const int lo = std::max(0, y - radius);
      const int hi = std::min(h, y + radius + 1);
      if (prefix[hi] - prefix[lo] > 0) out.set(x, y);
    }
  }
  return out;
}

RasterMask fill_interior(const RasterMask& outline, double leak_fraction) {
  const int w = outline.width();
  const int h = outline.height();
  const std::size_t open_count = outline.size() - outline.count();
  if (open_count == 0) return outline;

  std::vector<std::uint8_t> reached(outline.size(), 0);
  std::vector<std::size_t> stack;
  auto seed = [&](int x, int y) {
    const std::size_t i = outline.offset(x, y);
    if (!outline.at(i) && !reached[i]) {
      reached[i] = 1;
      stack.push_back(i);
    }
  };
  for (int x = 0; x < w; ++x) {
    seed(x, 0);
    seed(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    seed(0, y);
    seed(w - 1, y);
  }
  std::size_t reached_count = stack.size();
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const int x = static_cast<int>(i % w);
    const int y = static_cast<int>(i / w);
    const int nx[4] = {x - 1, x + 1, x, x};
    const int ny[4] = {y, y, y - 1, y + 1};
    for (int k = 0; k < 4; ++k) {
      if (!outline.in_bounds(nx[k], ny[k])) continue;
      const std::size_t j = outline.offset(nx[k], ny[k]);
      if (outline.at(j) || reached[j]) continue;
      reached[j] = 1;
      ++reached_count;
      stack.push_back(j);
    }
  }
  if (static_cast<double>(reached_count) >= leak_fraction * static_cast<double>(open_count))
    throw Error(Errc::open_outline, "OpenOutline: border flood-fill reached " +
                                        std::to_string(reached_count) + " of " +
                                        std::to_string(open_count) + " open pixels");
  RasterMask interior(w, h);
  for (std::size_t i = 0; i < interior.size(); ++i)
    if (!reached[i]) interior.set(i);
  return interior;
}

namespace {

template <typename F>
auto run_stage(const char* stage, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(stage) + ": " + e.what(), stage);
  }
}

}  // namespace

ShapeMask build_shape_from_mask(std::optional<Topic> topic, const RasterMask& mask, int size,
                                int dilation_radius) {
  ShapeMask shape;
  shape.topic = topic;
  shape.canvas_size = size;
  shape.dilation_radius = dilation_radius;
  const RasterMask canonical = run_stage("crop", [&] { return crop_recenter_resize(mask, size); });
  const RasterMask sparse = run_stage("outline", [&] { return extreme_point_outline(canonical); });
  shape.outline = run_stage("dilate", [&] { return dilate(sparse, dilation_radius); });
  shape.interior = run_stage("fill", [&] { return fill_interior(shape.outline); });
  return shape;
}

ShapeMask build_shape(Topic topic, const GrayImage& icon, int size, int dilation_radius,
                      int threshold) {
  const RasterMask binary = run_stage("binarize", [&] { return binarize(icon, threshold); });
  return build_shape_from_mask(topic, binary, size, dilation_radius);
}

ShapeMask square_shape(int size, int dilation_radius) {
  const int side = std::max(1, static_cast<int>(std::floor(kDefaultMargin * size)));
  return build_shape_from_mask(std::nullopt, square_mask(size, side), size, dilation_radius);
}

// ---------------------------------------------------------------------------
// ShapeLibrary

ShapeLibrary ShapeLibrary::load(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const fs::path manifest_path = dir / "manifest.json";
  if (!fs::is_directory(dir) || !fs::exists(manifest_path))
    throw Error(Errc::shape_missing, "shapes directory " + dir.string() + " has no manifest.json");
  nlohmann::json manifest;
  try {
    std::ifstream in(manifest_path);
    manifest = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, "shape manifest: " + std::string(e.what()));
  }
  ShapeLibrary lib;
  try {
    lib.canvas_size_ = manifest.at("canvas_size").get<int>();
    lib.dilation_radius_ = manifest.at("dilation_radius").get<int>();
    for (const auto& item : manifest.at("shapes")) {
      const auto topic_name = item.at("topic").get<std::string>();
      const auto topic = parse_topic(topic_name);
      if (!topic) throw Error(Errc::parse_error, "shape manifest: unknown topic " + topic_name);
      ShapeMask s;
      s.topic = topic;
      s.canvas_size = lib.canvas_size_;
      s.dilation_radius = lib.dilation_radius_;
      s.outline = decode_pbm(read_file(dir / item.at("outline").get<std::string>()));
      s.interior = decode_pbm(read_file(dir / item.at("interior").get<std::string>()));
      if (s.outline.width() != lib.canvas_size_ || s.interior.width() != lib.canvas_size_)
        throw Error(Errc::parse_error, "shape " + topic_name + ": size does not match manifest");
      lib.put(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, "shape manifest: " + std::string(e.what()));
  }
  return lib;
}

void ShapeLibrary::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["canvas_size"] = canvas_size_;
  manifest["dilation_radius"] = dilation_radius_;
  manifest["shapes"] = nlohmann::json::array();
  for (Topic t : kAllTopics) {
    if (!shapes_[index(t)]) continue;
    const ShapeMask& s = *shapes_[index(t)];
    const std::string stem(name(t));
    write_file(dir / (stem + ".outline.pbm"), encode_pbm(s.outline));
    write_file(dir / (stem + ".interior.pbm"), encode_pbm(s.interior));
    manifest["shapes"].push_back(
        {{"topic", stem}, {"outline", stem + ".outline.pbm"}, {"interior", stem + ".interior.pbm"}});
  }
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

void ShapeLibrary::put(ShapeMask shape) {
  if (!shape.topic) throw Error(Errc::invalid_argument, "library shapes need a topic");
  canvas_size_ = shape.canvas_size;
  dilation_radius_ = shape.dilation_radius;
  shapes_[index(*shape.topic)] = std::move(shape);
}

const ShapeMask& ShapeLibrary::get(Topic t) const {
  if (!shapes_[index(t)])
    throw Error(Errc::shape_missing, "no shape loaded for topic '" + std::string(name(t)) + "'");
  return *shapes_[index(t)];
}

std::vector<Topic> ShapeLibrary::topics() const {
  std::vector<Topic> out;
  for (Topic t : kAllTopics)
    if (shapes_[index(t)]) out.push_back(t);
  return out;
}

std::size_t ShapeLibrary::size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(shapes_.begin(), shapes_.end(), [](const auto& s) { return s.has_value(); }));
}

}  // namespace lemotif
