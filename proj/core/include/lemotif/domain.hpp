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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lemotif {

// Enumerators are declared in alphabetical order; that order is also the
// tie-break order used by label selection.
enum class Topic : std::uint8_t {
  exercise, family, food, friends, god, health, love, recreation, school, sleep, work,
};

enum class Emotion : std::uint8_t {
  afraid, angry, anxious, ashamed, awkward, bored, calm, confused, disgusted,
  excited, frustrated, happy, jealous, nostalgic, proud, sad, satisfied, surprised,
};

enum class Valence : std::uint8_t { negative, neutral, positive };

inline constexpr std::size_t kTopicCount = 11;
inline constexpr std::size_t kEmotionCount = 18;
inline constexpr std::size_t kLabelCount = kTopicCount + kEmotionCount;

inline constexpr std::array<Topic, kTopicCount> kAllTopics = {
    Topic::exercise, Topic::family, Topic::food,       Topic::friends,
    Topic::god,      Topic::health, Topic::love,       Topic::recreation,
    Topic::school,   Topic::sleep,  Topic::work,
};

inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::afraid,    Emotion::angry,     Emotion::anxious,  Emotion::ashamed,
    Emotion::awkward,   Emotion::bored,     Emotion::calm,     Emotion::confused,
    Emotion::disgusted, Emotion::excited,   Emotion::frustrated, Emotion::happy,
    Emotion::jealous,   Emotion::nostalgic, Emotion::proud,    Emotion::sad,
    Emotion::satisfied, Emotion::surprised,
};

inline constexpr std::array<Valence, 3> kAllValences = {
    Valence::negative, Valence::neutral, Valence::positive};

std::string_view name(Topic t) noexcept;
std::string_view name(Emotion e) noexcept;
std::string_view name(Valence v) noexcept;

std::optional<Topic> parse_topic(std::string_view s) noexcept;
std::optional<Emotion> parse_emotion(std::string_view s) noexcept;

constexpr std::size_t index(Topic t) noexcept { return static_cast<std::size_t>(t); }
constexpr std::size_t index(Emotion e) noexcept { return static_cast<std::size_t>(e); }

/// Fixed three-way grouping: 8 negative, 6 neutral, 4 positive emotions.
Valence valence_of(Emotion e) noexcept;

/// Most frequent valence after mapping each emotion. Ties prefer
/// positive, then negative, then neutral. Throws Errc::empty_input.
Valence majority_valence(std::span<const Emotion> emotions);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

/// "#RRGGBB" (case-insensitive); nullopt on anything else.
std::optional<Rgb> parse_hex_color(std::string_view s) noexcept;
std::string to_hex(Rgb c);

struct SubEntry {
  std::string text;
  std::optional<std::vector<Topic>> topics;
  std::optional<std::vector<Emotion>> emotions;

  bool has_labels() const noexcept { return topics.has_value() || emotions.has_value(); }
};

struct Entry {
  std::string id;
  std::vector<SubEntry> sub_entries;  // 1..3
};

inline constexpr std::size_t kMaxSubEntries = 3;

}  // namespace lemotif
