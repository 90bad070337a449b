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

#include "lemotif/domain.hpp"

#include <algorithm>
#include <cstdio>

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

constexpr std::array<std::string_view, kTopicCount> kTopicNames = {
    "exercise", "family", "food", "friends", "god", "health",
    "love", "recreation", "school", "sleep", "work"};

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "afraid",  "angry",      "anxious", "ashamed", "awkward",   "bored",
    "calm",    "confused",   "disgusted", "excited", "frustrated", "happy",
    "jealous", "nostalgic",  "proud",   "sad",     "satisfied", "surprised"};

int hex_digit(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view name(Topic t) noexcept { return kTopicNames[index(t)]; }
std::string_view name(Emotion e) noexcept { return kEmotionNames[index(e)]; }

std::string_view name(Valence v) noexcept {
  switch (v) {
    case Valence::negative: return "negative";
    case Valence::neutral: return "neutral";
    case Valence::positive: return "positive";
  }
  return "neutral";
}

std::optional<Topic> parse_topic(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kTopicNames.size(); ++i)
    if (kTopicNames[i] == s) return kAllTopics[i];
  return std::nullopt;
}

std::optional<Emotion> parse_emotion(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kEmotionNames.size(); ++i)
    if (kEmotionNames[i] == s) return kAllEmotions[i];
  return std::nullopt;
}

Valence valence_of(Emotion e) noexcept {
  switch (e) {
    case Emotion::afraid:
    case Emotion::angry:
    case Emotion::anxious:
    case Emotion::ashamed:
    case Emotion::disgusted:
    case Emotion::frustrated:
    case Emotion::jealous:
    case Emotion::sad:
      return Valence::negative;
    case Emotion::awkward:
    case Emotion::bored:
    case Emotion::calm:
    case Emotion::confused:
    case Emotion::nostalgic:
    case Emotion::surprised:
      return Valence::neutral;
    case Emotion::excited:
    case Emotion::happy:
    case Emotion::proud:
    case Emotion::satisfied:
      return Valence::positive;
  }
  return Valence::neutral;
}

Valence majority_valence(std::span<const Emotion> emotions) {
  if (emotions.empty())
    throw Error(Errc::empty_input, "majority_valence: no emotions given");
  std::array<std::size_t, 3> counts{};
  for (Emotion e : emotions) ++counts[static_cast<std::size_t>(valence_of(e))];
  // Visit in ascending preference so that later (preferred) classes win ties.
  constexpr std::array<Valence, 3> kPreference = {Valence::neutral, Valence::negative,
                                                  Valence::positive};
  Valence best = kPreference[0];
  for (Valence v : kPreference)
    if (counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(best)]) best = v;
  return best;
}

std::optional<Rgb> parse_hex_color(std::string_view s) noexcept {
  if (s.size() != 7 || s[0] != '#') return std::nullopt;
  std::array<int, 6> d{};
  for (std::size_t i = 0; i < 6; ++i) {
    d[i] = hex_digit(s[i + 1]);
    if (d[i] < 0) return std::nullopt;
  }
  return Rgb{static_cast<std::uint8_t>(d[0] * 16 + d[1]),
             static_cast<std::uint8_t>(d[2] * 16 + d[3]),
             static_cast<std::uint8_t>(d[4] * 16 + d[5])};
}

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", c.r, c.g, c.b);
  return buf;
}

}  // namespace lemotif
