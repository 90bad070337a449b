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

#include <nlohmann/json_fwd.hpp>

#include "lemotif/domain.hpp"

namespace lemotif {

inline constexpr int kDefaultColorDistanceFloor = 60;

/// Emotion and valence display colors. Construct through default_palette()
/// or load_palette(); both enforce totality and pairwise distinctness.
struct Palette {
  std::array<Rgb, kEmotionCount> emotion_colors{};
  std::array<Rgb, 3> valence_colors{};

  Rgb color(Emotion e) const noexcept { return emotion_colors[index(e)]; }
  Rgb color(Valence v) const noexcept { return valence_colors[static_cast<std::size_t>(v)]; }
};

const Palette& default_palette() noexcept;

inline Rgb palette_color(const Palette& p, Emotion e) noexcept { return p.color(e); }

/// max(|dr|, |dg|, |db|)
int channel_distance(Rgb a, Rgb b) noexcept;

/// Smallest channel_distance over all pairs of emotion colors.
int min_pairwise_distance(const Palette& p) noexcept;

/// Throws Errc::invalid_argument when two emotion colors are closer than `floor`.
void validate_palette(const Palette& p, int floor = kDefaultColorDistanceFloor);

/// Parses `{ "emotion_colors": { "<emotion>": "#RRGGBB", ... } }`. All 18 keys
/// are required; unknown keys and indistinct colors are rejected.
Palette palette_from_json(const nlohmann::json& doc, int floor = kDefaultColorDistanceFloor);
Palette load_palette(const std::filesystem::path& path,
                     int floor = kDefaultColorDistanceFloor);

}  // namespace lemotif
