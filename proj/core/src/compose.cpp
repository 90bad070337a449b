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

#include "lemotif/compose.hpp"

#include <algorithm>
#include <future>

#include "lemotif/error.hpp"
#include "lemotif/font.hpp"
#include "lemotif/rng.hpp"
#include "lemotif/schema.hpp"

namespace lemotif {

namespace {

constexpr std::string_view kNoFeelings = "(no feelings detected)";

Motif render_panel(const LabelSet& labels, const EntryOptions& options, std::uint64_t seed,
                   const ShapeLibrary& shapes, const Palette& palette) {
  const StyleInfo& info = style_info(options.style);
  const int size = shapes.canvas_size();
  MotifRequest req;
  req.style = options.style;
  req.params = options.params;
  req.seed = seed;
  req.shape = labels.topic && !info.square_shape
                  ? shapes.get(*labels.topic)
                  : shared_square_shape(size, shapes.dilation_radius());
  Motif out;
  if (labels.emotions.empty()) {
    out.image = blank_panel(req.shape);
  } else {
    if (info.valence_colors) {
      req.colors = {valence_color(std::span(&labels, 1), palette)};
    } else {
      req.colors = emotion_colors(labels, palette);
    }
    out = render_motif(req, shapes);
  }
  out.caption = caption_for(labels);
  return out;
}

}  // namespace

std::string caption_for(const LabelSet& labels) {
  std::string text(labels.topic ? name(*labels.topic) : "general");
  text += ": ";
  if (labels.emotions.empty()) return text + std::string(kNoFeelings);
  for (std::size_t i = 0; i < labels.emotions.size(); ++i) {
    if (i > 0) text += ", ";
    text += name(labels.emotions[i]);
  }
  return text;
}

Canvas caption_strip(const std::string& text, int width) {
  Canvas strip(width, kCaptionHeight, opaque(kBackgroundColor));
  int scale = 2;
  if (font::text_width(text, scale) > width - 2 * kCaptionPad) scale = 1;
  const int tw = font::text_width(text, scale);
  const int x = std::max(kCaptionPad, (width - tw) / 2);
  const int y = (kCaptionHeight - font::kGlyphHeight * scale) / 2;
  font::draw_text(strip, x, y, text, kCaptionColor, scale);
  return strip;
}

Canvas assemble_entry(std::span<const Motif> motifs, bool captions, int gutter) {
  if (motifs.empty()) throw Error(Errc::invalid_argument, "no panels to assemble", "panels");
  if (gutter < 0) throw Error(Errc::invalid_argument, "gutter must be non-negative", "gutter");
  int width = gutter * static_cast<int>(motifs.size() - 1);
  int panel_height = 0;
  for (const auto& m : motifs) {
    width += m.image.width();
    panel_height = std::max(panel_height, m.image.height());
  }
  Canvas out(width, panel_height + (captions ? kCaptionHeight : 0), opaque(kBackgroundColor));
  int x = 0;
  for (const auto& m : motifs) {
    out.blit(m.image, x, 0);
    if (captions) out.blit(caption_strip(m.caption, m.image.width()), x, panel_height);
    x += m.image.width() + gutter;
  }
  return out;
}

EntryRender render_entry(std::span<const LabelSet> label_sets, const EntryOptions& options,
                         const ShapeLibrary& shapes, const Palette& palette) {
  if (label_sets.empty() || label_sets.size() > kMaxSubEntries) {
    throw Error(Errc::invalid_argument, "an entry needs 1 to 3 label sets", "label_sets");
  }
  EntryRender out;
  out.params = resolve_params(options.style, options.params);
  const StyleInfo& info = style_info(options.style);

  if (info.whole_entry) {
    const ShapeMask& square = shared_square_shape(shapes.canvas_size(), shapes.dilation_radius());
    Motif m;
    const bool any = std::any_of(label_sets.begin(), label_sets.end(),
                                 [](const LabelSet& l) { return !l.emotions.empty(); });
    if (any) {
      MotifRequest req;
      req.style = options.style;
      req.shape = square;
      req.seed = derive_seed(options.seed, 0);
      req.colors = {valence_color(label_sets, palette)};
      m = render_motif(req, shapes);
      std::vector<Emotion> all;
      for (const auto& l : label_sets) all.insert(all.end(), l.emotions.begin(), l.emotions.end());
      m.caption = "day: " + std::string(name(majority_valence(all)));
    } else {
      m.image = blank_panel(square);
      m.caption = "day: " + std::string(kNoFeelings);
    }
    out.panel_seeds.push_back(derive_seed(options.seed, 0));
    out.panels.push_back(std::move(m));
  } else {
    std::vector<std::future<Motif>> jobs;
    for (std::size_t i = 0; i < label_sets.size(); ++i) {
      const std::uint64_t seed = derive_seed(options.seed, i);
      out.panel_seeds.push_back(seed);
      jobs.push_back(std::async(std::launch::async, render_panel, std::cref(label_sets[i]),
                                std::cref(options), seed, std::cref(shapes), std::cref(palette)));
    }
    for (auto& j : jobs) out.panels.push_back(j.get());
  }
  out.image = assemble_entry(out.panels, options.captions, options.gutter);
  return out;
}

nlohmann::json sidecar_json(const EntryRender& render, std::span<const LabelSet> label_sets,
                            const EntryOptions& options) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : label_sets) labels.push_back(to_json(l));
  nlohmann::json panels = nlohmann::json::array();
  for (std::size_t i = 0; i < render.panels.size(); ++i) {
    panels.push_back({{"caption", render.panels[i].caption},
                      {"seed", std::to_string(render.panel_seeds[i])},
                      {"primitives", to_json(render.panels[i].log)}});
  }
  return {{"style", name(options.style)},
          {"seed", std::to_string(options.seed)},
          {"params", render.params},
          {"captions", options.captions},
          {"width", render.image.width()},
          {"height", render.image.height()},
          {"label_sets", labels},
          {"panels", panels}};
}

}  // namespace lemotif
