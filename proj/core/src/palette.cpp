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

#include "lemotif/palette.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

Palette make_default() {
  Palette p;
  auto set = [&](Emotion e, int r, int g, int b) {
    p.emotion_colors[index(e)] = Rgb{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                     static_cast<std::uint8_t>(b)};
  };
  set(Emotion::afraid, 40, 40, 90);        // midnight blue
  set(Emotion::angry, 150, 0, 0);          // dark red
  set(Emotion::anxious, 255, 140, 0);      // dark orange
  set(Emotion::ashamed, 170, 80, 40);      // sienna
  set(Emotion::awkward, 255, 200, 200);    // pale pink
  set(Emotion::bored, 128, 128, 128);      // gray
  set(Emotion::calm, 135, 206, 235);       // sky blue
  set(Emotion::confused, 255, 105, 180);   // hot pink
  set(Emotion::disgusted, 107, 142, 35);   // olive
  set(Emotion::excited, 255, 255, 0);      // yellow
  set(Emotion::frustrated, 220, 20, 60);   // crimson
  set(Emotion::happy, 255, 230, 90);       // warm yellow
  set(Emotion::jealous, 0, 128, 0);        // green
  set(Emotion::nostalgic, 188, 143, 143);  // rosy brown
  set(Emotion::proud, 128, 0, 128);        // purple
  set(Emotion::sad, 0, 0, 200);            // blue
  set(Emotion::satisfied, 0, 200, 120);    // teal green
  set(Emotion::surprised, 0, 220, 255);    // cyan
  p.valence_colors[static_cast<std::size_t>(Valence::negative)] = Rgb{255, 0, 0};
  p.valence_colors[static_cast<std::size_t>(Valence::neutral)] = Rgb{255, 255, 0};
  p.valence_colors[static_cast<std::size_t>(Valence::positive)] = Rgb{0, 128, 0};
  return p;
}

}  // namespace

const Palette& default_palette() noexcept {
  static const Palette palette = make_default();
  return palette;
}

int channel_distance(Rgb a, Rgb b) noexcept {
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

int min_pairwise_distance(const Palette& p) noexcept {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < kEmotionCount; ++i)
    for (std::size_t j = i + 1; j < kEmotionCount; ++j)
      best = std::min(best, channel_distance(p.emotion_colors[i], p.emotion_colors[j]));
  return best;
}

void validate_palette(const Palette& p, int floor) {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    for (std::size_t j = i + 1; j < kEmotionCount; ++j) {
      const int d = channel_distance(p.emotion_colors[i], p.emotion_colors[j]);
      if (d < floor || d == 0) {
        throw Error(Errc::invalid_argument,
                    "palette colors for '" + std::string(name(kAllEmotions[i])) + "' and '" +
                        std::string(name(kAllEmotions[j])) + "' are too similar (distance " +
                        std::to_string(d) + " < " + std::to_string(floor) + ")",
                    "emotion_colors." + std::string(name(kAllEmotions[j])));
      }
    }
  }
}

Palette palette_from_json(const nlohmann::json& doc, int floor) {
  if (!doc.is_object() || !doc.contains("emotion_colors") || !doc["emotion_colors"].is_object())
    throw Error(Errc::parse_error, "palette: expected an object with 'emotion_colors'",
                "emotion_colors");
  for (const auto& [key, _] : doc.items())
    if (key != "emotion_colors")
      throw Error(Errc::parse_error, "palette: unknown field '" + key + "'", key);

  Palette p = default_palette();
  std::array<bool, kEmotionCount> seen{};
  for (const auto& [key, value] : doc["emotion_colors"].items()) {
    const auto emotion = parse_emotion(key);
    const std::string field = "emotion_colors." + key;
    if (!emotion) throw Error(Errc::parse_error, "palette: unknown emotion '" + key + "'", field);
    const auto color = value.is_string() ? parse_hex_color(value.get<std::string>()) : std::nullopt;
    if (!color) throw Error(Errc::parse_error, "palette: '" + key + "' is not #RRGGBB", field);
    p.emotion_colors[index(*emotion)] = *color;
    seen[index(*emotion)] = true;
  }
  for (Emotion e : kAllEmotions)
    if (!seen[index(e)])
      throw Error(Errc::parse_error, "palette: missing color for '" + std::string(name(e)) + "'",
                  "emotion_colors." + std::string(name(e)));
  validate_palette(p, floor);
  return p;
}

Palette load_palette(const std::filesystem::path& path, int floor) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open palette file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, "palette " + path.string() + ": " + e.what());
  }
  return palette_from_json(doc, floor);
}

}  // namespace lemotif
