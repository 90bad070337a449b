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

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "lemotif/domain.hpp"

using namespace lemotif;

TEST_SUITE("domain") {
  TEST_CASE("topic and emotion names round-trip") {
    CHECK(kAllTopics.size() == 11);
    CHECK(kAllEmotions.size() == 18);
    for (Topic t : kAllTopics) CHECK(parse_topic(name(t)) == t);
    for (Emotion e : kAllEmotions) CHECK(parse_emotion(name(e)) == e);
    CHECK_FALSE(parse_topic("autoencoder").has_value());
    CHECK_FALSE(parse_emotion("Happy").has_value());
  }

  TEST_CASE("enumerations are alphabetical") {
    CHECK(std::is_sorted(kAllTopics.begin(), kAllTopics.end(),
                         [](Topic a, Topic b) { return name(a) < name(b); }));
    CHECK(std::is_sorted(kAllEmotions.begin(), kAllEmotions.end(),
                         [](Emotion a, Emotion b) { return name(a) < name(b); }));
  }

  TEST_CASE("valence partition sizes") {
    std::map<Valence, int> sizes;
    for (Emotion e : kAllEmotions) ++sizes[valence_of(e)];
    CHECK(sizes[Valence::negative] == 8);
    CHECK(sizes[Valence::neutral] == 6);
    CHECK(sizes[Valence::positive] == 4);
  }

  TEST_CASE("majority valence") {
    const std::vector<Emotion> mostly_positive{Emotion::happy, Emotion::proud, Emotion::sad};
    CHECK(majority_valence(mostly_positive) == Valence::positive);
    const std::vector<Emotion> tie{Emotion::sad, Emotion::happy};
    CHECK(majority_valence(tie) == Valence::positive);
    const std::vector<Emotion> neg_neutral{Emotion::bored, Emotion::angry};
    CHECK(majority_valence(neg_neutral) == Valence::negative);
    const std::vector<Emotion> neutral{Emotion::calm, Emotion::calm, Emotion::angry};
    CHECK(majority_valence(neutral) == Valence::neutral);
    CHECK(testing::error_code([] { majority_valence({}); }) == Errc::empty_input);
  }

  TEST_CASE("majority valence is permutation-invariant") {
    lemotif::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Emotion> es(1 + rng.below(6));
      for (Emotion& e : es) e = kAllEmotions[rng.below(kAllEmotions.size())];
      const Valence expected = majority_valence(es);
      for (int k = 0; k < 5; ++k) {
        for (std::size_t i = es.size(); i > 1; --i) std::swap(es[i - 1], es[rng.below(i)]);
        CHECK(majority_valence(es) == expected);
      }
    }
  }

  TEST_CASE("hex colors") {
    CHECK(parse_hex_color("#ff8000") == Rgb{255, 128, 0});
    CHECK(parse_hex_color("#FF8000") == Rgb{255, 128, 0});
    CHECK_FALSE(parse_hex_color("ff8000").has_value());
    CHECK_FALSE(parse_hex_color("#ff80").has_value());
    CHECK_FALSE(parse_hex_color("#gg8000").has_value());
    for (int v : {0, 1, 127, 254, 255}) {
      const Rgb c{static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(255 - v), 7};
      CHECK(parse_hex_color(to_hex(c)) == c);
    }
  }
}
