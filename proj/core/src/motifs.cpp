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

#include "lemotif/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <memory>
#include <mutex>
#include <numeric>

#include "lemotif/error.hpp"
#include "lemotif/rng.hpp"

namespace lemotif {
namespace {

using nlohmann::json;

json rgb_json(Rgb c) { return to_hex(c); }

void require_colors(const MotifRequest& req) {
  if (req.colors.empty()) {
    throw Error(Errc::empty_color_list, "motif request has no colors", "colors");
  }
}

int panel_size(const ShapeMask& s) { return s.interior.width(); }

Rgb pick(Rng& rng, const std::vector<Rgb>& colors) {
  return colors[static_cast<std::size_t>(rng.below(colors.size()))];
}

// Half-open [begin, end) bounds of grid cell k along an axis of length `size`.
std::pair<int, int> cell_span(int k, int n, int size) {
  return {static_cast<int>(static_cast<std::int64_t>(k) * size / n),
          static_cast<int>(static_cast<std::int64_t>(k + 1) * size / n)};
}

double posmod(double a, double m) {
  const double r = std::fmod(a, m);
  return r < 0.0 ? r + m : r;
}

}  // namespace

const ShapeMask& shared_square_shape(int size, int radius) {
  // Built once per (size, radius); concurrent renders only read it afterwards.
  static std::mutex mu;
  static std::vector<std::pair<std::pair<int, int>, std::unique_ptr<ShapeMask>>> cache;
  std::lock_guard lock(mu);
  for (const auto& [key, shape] : cache) {
    if (key == std::pair{size, radius}) return *shape;
  }
  cache.emplace_back(std::pair{size, radius}, std::make_unique<ShapeMask>(square_shape(size, radius)));
  return *cache.back().second;
}

json to_json(const PrimitiveLog& log) {
  json circles = json::array();
  for (const auto& c : log.circles) {
    circles.push_back({{"x", c.x}, {"y", c.y}, {"r", c.r}, {"color", rgb_json(c.color)}});
  }
  json strokes = json::array();
  for (const auto& s : log.strokes) {
    strokes.push_back({{"p0", {s.p0.x, s.p0.y}},
                       {"p1", {s.p1.x, s.p1.y}},
                       {"ctrl", {s.ctrl.x, s.ctrl.y}},
                       {"width", s.width},
                       {"color", rgb_json(s.color)},
                       {"overlay_width", s.overlay_width},
                       {"overlay_color", rgb_json(s.overlay_color)}});
  }
  json cells = json::array();
  for (const auto& c : log.cells) {
    json cell = {{"row", c.row}, {"col", c.col}};
    if (c.kind.empty()) {
      cell["angle"] = c.angle;
    } else {
      cell["kind"] = c.kind;
    }
    cells.push_back(std::move(cell));
  }
  json icons = json::array();
  for (const auto& i : log.icons) {
    icons.push_back({{"topic", name(i.topic)},
                     {"x", i.x},
                     {"y", i.y},
                     {"side", i.side},
                     {"color", rgb_json(i.color)},
                     {"alpha", i.alpha}});
  }
  json bands = json::array();
  for (const auto& b : log.bands) {
    bands.push_back(
        {{"x_begin", b.x_begin}, {"x_end", b.x_end}, {"color", rgb_json(b.color)}, {"area", b.area}});
  }
  return {{"circles", circles}, {"strokes", strokes}, {"cells", cells},
          {"icons", icons},     {"bands", bands},     {"regions", log.regions}};
}

Canvas blank_panel(const ShapeMask& shape) {
  const int size = panel_size(shape);
  Canvas canvas(size, size, opaque(kBackgroundColor));
  fill_mask(canvas, shape.outline, kOutlineColor);
  return canvas;
}

Motif circle_packing(const MotifRequest& req) {
  require_colors(req);
  const auto p = CirclePackingParams::from_json(resolve_params(StyleId::circle_packing, req.params));
  const ShapeMask& shape = req.shape;
  Motif out{blank_panel(shape), {}, {}};
  Rng rng(req.seed);

  const auto dist2 = squared_distance_to_background(shape.interior);
  std::vector<std::int32_t> candidates;
  for (std::size_t i = 0; i < shape.interior.size(); ++i) {
    if (shape.interior.at(i)) candidates.push_back(static_cast<std::int32_t>(i));
  }
  if (candidates.empty()) return out;

  const int w = shape.interior.width();
  auto& placed = out.log.circles;
  for (std::size_t k = 0; k < p.radii.size(); ++k) {
    const double r = p.radii[k];
    for (int n = 0; n < p.counts[k]; ++n) {
      for (int trial = 0; trial < p.max_trials; ++trial) {
        const std::int32_t i = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        if (static_cast<double>(dist2[static_cast<std::size_t>(i)]) <= r * r) continue;
        const double cx = i % w;
        const double cy = i / w;
        const bool clear = std::none_of(placed.begin(), placed.end(), [&](const CircleRecord& c) {
          const double dx = c.x - cx;
          const double dy = c.y - cy;
          return dx * dx + dy * dy < (c.r + r) * (c.r + r);
        });
        if (!clear) continue;
        const Rgb color = pick(rng, req.colors);
        placed.push_back({cx, cy, r, color});
        fill_circle(out.image, {cx, cy}, r, color, &shape.interior);
        break;
      }
    }
  }
  return out;
}

Motif string_doll(const MotifRequest& req) {
  require_colors(req);
  const auto p = StringDollParams::from_json(resolve_params(StyleId::string_doll, req.params));
  const ShapeMask& shape = req.shape;
  std::vector<std::int32_t> boundary;
  for (std::size_t i = 0; i < shape.outline.size(); ++i) {
    if (shape.outline.at(i)) boundary.push_back(static_cast<std::int32_t>(i));
  }
  if (boundary.size() < 2) {
    throw Error(Errc::degenerate_outline, "outline has fewer than 2 pixels", "shape.outline");
  }

  Motif out{blank_panel(shape), {}, {}};
  Rng rng(req.seed);
  const int w = shape.outline.width();
  const double sigma = p.sigma_frac * panel_size(shape);
  auto as_point = [w](std::int32_t i) {
    return Point{static_cast<double>(i % w), static_cast<double>(i / w)};
  };

  for (int s = 0; s < p.n_strokes; ++s) {
    const auto a = rng.below(boundary.size());
    auto b = rng.below(boundary.size() - 1);
    if (b >= a) ++b;
    StrokeRecord rec;
    rec.p0 = as_point(boundary[a]);
    rec.p1 = as_point(boundary[b]);
    const double nx = rng.normal();
    const double ny = rng.normal();
    rec.ctrl = {(rec.p0.x + rec.p1.x) / 2.0 + sigma * nx, (rec.p0.y + rec.p1.y) / 2.0 + sigma * ny};
    rec.width = static_cast<int>(rng.range(p.w_min, p.w_max));
    rec.color = pick(rng, req.colors);
    rec.overlay_width = rec.width / 4;
    rec.overlay_color = lighten_darken(rec.color, rng.bernoulli(0.5) ? 0.3 : -0.3);

    const auto pts = quad_bezier_points(rec.p0, rec.p1, rec.ctrl, bezier_step(rec.p0, rec.p1, rec.ctrl));
    stroke_polyline(out.image, pts, rec.width, rec.color, &shape.interior);
    if (rec.overlay_width > 0) {
      stroke_polyline(out.image, pts, rec.overlay_width, rec.overlay_color, &shape.interior);
    }
    out.log.strokes.push_back(rec);
  }
  return out;
}

Motif carpet(const MotifRequest& req) {
  require_colors(req);
  const auto p = CarpetParams::from_json(resolve_params(StyleId::carpet, req.params));
  const ShapeMask& shape = req.shape;
  const int size = panel_size(shape);
  Motif out{blank_panel(shape), {}, {}};
  Rng rng(req.seed);

  for (int row = 0; row < p.grid; ++row) {
    const auto [y0, y1] = cell_span(row, p.grid, size);
    for (int col = 0; col < p.grid; ++col) {
      const auto [x0, x1] = cell_span(col, p.grid, size);
      const int angle = p.angles[static_cast<std::size_t>(rng.below(p.angles.size()))];
      out.log.cells.push_back({row, col, angle, {}});
      const int cw = x1 - x0;
      const int ch = y1 - y0;
      if (cw <= 0 || ch <= 0) continue;

      const double theta = angle * std::numbers::pi / 180.0;
      const double nx = -std::sin(theta);
      const double ny = std::cos(theta);
      const double cx = (x0 + x1) / 2.0;
      const double cy = (y0 + y1) / 2.0;
      RasterMask inside(cw, ch);
      RasterMask lines(cw, ch);
      for (int y = 0; y < ch; ++y) {
        for (int x = 0; x < cw; ++x) {
          if (!shape.interior.at(x0 + x, y0 + y)) continue;
          inside.set(x, y);
          const double d = (x0 + x + 0.5 - cx) * nx + (y0 + y + 0.5 - cy) * ny;
          if (posmod(d - p.spacing / 2.0 + p.thickness / 2.0, p.spacing) < p.thickness) {
            lines.set(x, y);
          }
        }
      }
      for (auto& region : connected_regions(inside, lines)) {
        const Rgb color = pick(rng, req.colors);
        for (auto& i : region) {
          i = static_cast<std::int32_t>(out.image.offset(x0 + i % cw, y0 + i / cw));
        }
        fill_pixels(out.image, region, color);
        ++out.log.regions;
      }
      for (int y = 0; y < ch; ++y) {
        for (int x = 0; x < cw; ++x) {
          if (lines.at(x, y)) out.image.at(x0 + x, y0 + y) = opaque(kLineColor);
        }
      }
    }
  }
  return out;
}

Motif tile(const MotifRequest& req) {
  require_colors(req);
  const auto p = TileParams::from_json(resolve_params(StyleId::tile, req.params));
  const ShapeMask& shape = req.shape;
  const int size = panel_size(shape);
  Motif out{blank_panel(shape), {}, {}};
  Rng rng(req.seed);

  RasterMask barriers(size, size);
  const double half = p.line_width / 2.0;
  for (int row = 0; row < p.grid; ++row) {
    const auto [y0, y1] = cell_span(row, p.grid, size);
    for (int col = 0; col < p.grid; ++col) {
      const auto [x0, x1] = cell_span(col, p.grid, size);
      const bool forward = rng.bernoulli(p.p_diag);
      out.log.cells.push_back({row, col, 0, forward ? "/" : "\\"});
      const double w = x1 - x0;
      const double h = y1 - y0;
      const double norm = std::hypot(w, h);
      if (norm == 0.0) continue;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          const double u = x + 0.5 - x0;
          const double v = y + 0.5 - y0;
          const double e = forward ? h * u + w * v - w * h : h * u - w * v;
          if (std::abs(e) / norm < half) barriers.set(x, y);
        }
      }
    }
  }
  const auto regions = connected_regions(shape.interior, barriers);
  for (const auto& region : regions) fill_pixels(out.image, region, pick(rng, req.colors));
  out.log.regions = regions.size();
  fill_mask(out.image, barriers & shape.interior, kLineColor);
  return out;
}

Motif glass(const MotifRequest& req, const ShapeLibrary& icons) {
  require_colors(req);
  const auto p = GlassParams::from_json(resolve_params(StyleId::glass, req.params));
  const ShapeMask& shape = req.shape;
  const int size = panel_size(shape);
  Motif out{blank_panel(shape), {}, {}};
  if (p.passes == 0 || p.icons_per_pass == 0) return out;
  const auto topics = icons.topics();
  if (topics.empty()) {
    throw Error(Errc::shape_missing, "glass needs at least one icon shape", "shapes");
  }
  Rng rng(req.seed);

  for (int pass = 0; pass < p.passes; ++pass) {
    for (int k = 0; k < p.icons_per_pass; ++k) {
      IconRecord rec;
      rec.topic = topics[static_cast<std::size_t>(rng.below(topics.size()))];
      const double scale = rng.uniform(p.scale_min, p.scale_max);
      rec.side = std::max(1, static_cast<int>(std::lround(scale * size)));
      rec.x = static_cast<int>(rng.range(-rec.side / 2, size - (rec.side + 1) / 2));
      rec.y = static_cast<int>(rng.range(-rec.side / 2, size - (rec.side + 1) / 2));
      rec.color = pick(rng, req.colors);
      rec.alpha = static_cast<int>(rng.range(p.alpha_min, p.alpha_max));

      const RasterMask stamp = resample_nearest(icons.get(rec.topic).interior, rec.side, rec.side);
      std::vector<std::int32_t> region;
      for (int y = 0; y < rec.side; ++y) {
        for (int x = 0; x < rec.side; ++x) {
          const int cx = rec.x + x;
          const int cy = rec.y + y;
          if (stamp.at(x, y) && shape.interior.get(cx, cy)) {
            region.push_back(static_cast<std::int32_t>(out.image.offset(cx, cy)));
          }
        }
      }
      composite_over(out.image, rec.color, static_cast<std::uint8_t>(rec.alpha), region);
      out.log.icons.push_back(rec);
    }
  }
  return out;
}

Motif solid_bands(const MotifRequest& req) {
  require_colors(req);
  const ShapeMask& shape = req.shape;
  const int size = panel_size(shape);
  Motif out{blank_panel(shape), {}, {}};

  std::vector<std::size_t> column(static_cast<std::size_t>(size) + 1, 0);  // prefix counts
  for (int x = 0; x < size; ++x) {
    std::size_t c = 0;
    for (int y = 0; y < shape.interior.height(); ++y) c += shape.interior.at(x, y) ? 1 : 0;
    column[static_cast<std::size_t>(x) + 1] = column[static_cast<std::size_t>(x)] + c;
  }
  const std::size_t total = column.back();
  const std::size_t n = req.colors.size();

  // Interior boundaries snapped to the column edge nearest each equal-area target.
  std::vector<int> edges{0};
  for (std::size_t k = 1; k < n; ++k) {
    const double target = static_cast<double>(total) * static_cast<double>(k) / static_cast<double>(n);
    int best = 0;
    for (int x = 1; x <= size; ++x) {
      if (std::abs(static_cast<double>(column[static_cast<std::size_t>(x)]) - target) <
          std::abs(static_cast<double>(column[static_cast<std::size_t>(best)]) - target)) {
        best = x;
      }
    }
    edges.push_back(best);
  }
  edges.push_back(size);

  auto spread = [&](const std::vector<int>& e) {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      if (e[k + 1] < e[k]) return SIZE_MAX;
      const std::size_t a = column[static_cast<std::size_t>(e[k + 1])] - column[static_cast<std::size_t>(e[k])];
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    return hi - lo;
  };
  // Try every +-1 column shift of the interior boundaries; keep the tightest split.
  std::vector<int> best = edges;
  std::size_t best_spread = spread(edges);
  std::size_t combos = 1;
  for (std::size_t k = 1; k < n && n <= kMaxEmotions + 1; ++k) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<int> e = edges;
    std::size_t c = code;
    for (std::size_t k = 1; k < n; ++k, c /= 3) e[k] = std::clamp(e[k] + static_cast<int>(c % 3) - 1, 0, size);
    if (const std::size_t s = spread(e); s < best_spread) {
      best_spread = s;
      best = e;
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    const int begin = best[k], end = best[k + 1];
    const Rgb color = req.colors[k];
    for (int y = 0; y < shape.interior.height(); ++y) {
      for (int x = begin; x < end; ++x) {
        if (shape.interior.at(x, y)) out.image.at(x, y) = opaque(color);
      }
    }
    out.log.bands.push_back({begin, end, color, column[static_cast<std::size_t>(end)] -
                                                    column[static_cast<std::size_t>(begin)]});
  }
  out.log.regions = n;
  return out;
}

Motif solid_fill(const MotifRequest& req) {
  require_colors(req);
  Motif out{blank_panel(req.shape), {}, {}};
  fill_mask(out.image, req.shape.interior, req.colors.front());
  out.log.regions = 1;
  return out;
}

Motif render_motif(const MotifRequest& req, const ShapeLibrary& icons) {
  const StyleInfo& info = style_info(req.style);
  MotifRequest local;
  const MotifRequest* r = &req;
  if (info.square_shape && req.shape.topic.has_value()) {
    local = req;
    local.shape = shared_square_shape(panel_size(req.shape), req.shape.dilation_radius);
    r = &local;
  }
  switch (req.style) {
    case StyleId::circle_packing:
    case StyleId::b1:
      return circle_packing(*r);
    case StyleId::string_doll:
    case StyleId::b2:
      return string_doll(*r);
    case StyleId::carpet:
      return carpet(*r);
    case StyleId::tile:
      return tile(*r);
    case StyleId::glass:
      return glass(*r, icons);
    case StyleId::b3:
    case StyleId::b4:
      return solid_bands(*r);
    case StyleId::b5:
    case StyleId::b6:
    case StyleId::b7:
      return solid_fill(*r);
  }
  throw Error(Errc::unsupported_style, "unknown style", "style");
}

std::vector<Rgb> emotion_colors(const LabelSet& labels, const Palette& palette) {
  std::vector<Rgb> out;
  for (std::size_t i = 0; i < labels.emotions.size() && i < kMaxEmotions; ++i) {
    out.push_back(palette.color(labels.emotions[i]));
  }
  return out;
}

Rgb valence_color(std::span<const LabelSet> labels, const Palette& palette) {
  std::vector<Emotion> all;
  for (const auto& l : labels) all.insert(all.end(), l.emotions.begin(), l.emotions.end());
  if (all.empty()) {
    throw Error(Errc::empty_color_list, "no emotions to derive a valence color from", "emotions");
  }
  return palette.color(majority_valence(all));
}

Motif baseline(const MotifRequest& base, StyleId kind, std::span<const LabelSet> labels,
               const Palette& palette, const ShapeLibrary& icons) {
  const StyleInfo& info = style_info(kind);
  if (kind < StyleId::b1) {
    throw Error(Errc::unsupported_style, std::string(name(kind)) + " is not a baseline", "style");
  }
  if (labels.empty()) throw Error(Errc::empty_input, "baseline needs at least one label set");
  MotifRequest req = base;
  req.style = kind;
  if (info.valence_colors) {
    req.colors = {valence_color(info.whole_entry ? labels : labels.first(1), palette)};
  } else {
    req.colors = emotion_colors(labels.front(), palette);
  }
  return render_motif(req, icons);
}

}  // namespace lemotif
