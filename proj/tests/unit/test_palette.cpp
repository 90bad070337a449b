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

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "lemotif/palette.hpp"

using namespace lemotif;
using nlohmann::json;

namespace {

json palette_doc(const Palette& p) {
  json colors = json::object();
  for (Emotion e : kAllEmotions) colors[std::string(name(e))] = to_hex(p.color(e));
  return {{"emotion_colors", colors}};
}

}  // namespace

TEST_SUITE("palette") {
  TEST_CASE("default palette is separable") {
    const Palette& p = default_palette();
    CHECK(min_pairwise_distance(p) >= kDefaultColorDistanceFloor);
    CHECK_NOTHROW(validate_palette(p));
  }

  TEST_CASE("valence colors") {
    const Palette& p = default_palette();
    CHECK(p.color(Valence::negative) == Rgb{255, 0, 0});
    CHECK(p.color(Valence::neutral) == Rgb{255, 255, 0});
    CHECK(p.color(Valence::positive) == Rgb{0, 128, 0});
  }

  TEST_CASE("json round-trip") {
    const Palette p = palette_from_json(palette_doc(default_palette()));
    CHECK(p.emotion_colors == default_palette().emotion_colors);
  }

  TEST_CASE("json errors name the field") {
    json doc = palette_doc(default_palette());
    doc["emotion_colors"].erase("sad");
    try {
      palette_from_json(doc);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.detail() == "emotion_colors.sad");
    }

    doc = palette_doc(default_palette());
    doc["emotion_colors"]["sad"] = doc["emotion_colors"]["happy"];
    CHECK(testing::error_code([&] { palette_from_json(doc); }) == Errc::invalid_argument);

    doc = palette_doc(default_palette());
    doc["emotion_colors"]["elated"] = "#000000";
    CHECK(testing::error_code([&] { palette_from_json(doc); }) == Errc::parse_error);

    doc = palette_doc(default_palette());
    doc["emotion_colors"]["sad"] = "blue";
    CHECK(testing::error_code([&] { palette_from_json(doc); }) == Errc::parse_error);
  }

  TEST_CASE("channel distance is the max channel gap") {
    CHECK(channel_distance({0, 0, 0}, {10, 70, 20}) == 70);
    CHECK(channel_distance({5, 5, 5}, {5, 5, 5}) == 0);
  }
}
