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

#include <fstream>

#include "helpers.hpp"
#include "lemotif/schema.hpp"

using namespace lemotif;
using nlohmann::json;

namespace {

std::string failing_field(const json& doc) {
  try {
    entry_from_json(doc);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.detail();
  }
  FAIL("expected parse error");
  return {};
}

}  // namespace

TEST_SUITE("schema") {
  TEST_CASE("entry round-trip") {
    std::ifstream in(testing::fixtures() / "entry_3sub.json");
    const json doc = json::parse(in);
    const Entry e = entry_from_json(doc);
    CHECK(e.sub_entries.size() == 3);
    CHECK(entry_from_json(to_json(e)).sub_entries.size() == 3);
    CHECK(to_json(entry_from_json(to_json(e))) == to_json(e));
  }

  TEST_CASE("validation errors name the field") {
    CHECK(failing_field({{"id", "x"}, {"sub_entries", json::array()}}) == "sub_entries");
    CHECK(failing_field({{"id", "x"}, {"sub_entries", {{{"text", "a"}}}}, {"mood", 1}}) == "mood");
    CHECK(failing_field({{"id", "x"}, {"sub_entries", {{{"text", "a"}, {"emotions", {"elated"}}}}}}) ==
          "sub_entries[0].emotions[0]");
    CHECK(failing_field({{"id", "x"}, {"sub_entries", {{{"text", "a"}, {"topics", {"work", "autoencoder"}}}}}}) ==
          "sub_entries[0].topics[1]");
    CHECK(failing_field({{"id", "x"}, {"sub_entries", {{{"text", " "}, {"topics", {"work"}}}}}}) ==
          "sub_entries[0].text");
    CHECK(failing_field({{"sub_entries", {{{"text", "a"}}}}}) == "id");
    json four = {{"id", "x"}, {"sub_entries", json::array()}};
    for (int i = 0; i < 4; ++i) four["sub_entries"].push_back({{"text", "a"}});
    CHECK(failing_field(four) == "sub_entries");
  }

  TEST_CASE("dataset paths carry the entry index") {
    const json ds = {{"entries", {{{"id", "a"}, {"sub_entries", {{{"text", "x"}}}}},
                                  {{"id", "b"}, {"sub_entries", {{{"text", "x"}, {"emotions", {"meh"}}}}}}}}};
    try {
      dataset_from_json(ds);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.detail() == "entries[1].sub_entries[0].emotions[0]");
    }
    std::ifstream in(testing::fixtures() / "dataset_60.json");
    CHECK(dataset_from_json(json::parse(in)).size() == 20);
  }

  TEST_CASE("label sets") {
    const LabelSet s{Topic::work, {Emotion::happy, Emotion::calm}};
    CHECK(label_set_from_json(to_json(s)) == s);
    CHECK(label_set_from_json(json{{"topic", nullptr}, {"emotions", json::array()}}) == LabelSet{});
    CHECK(testing::error_code([] {
            label_set_from_json(json{{"emotions", {"sad", "sad", "sad", "sad", "sad"}}});
          }) == Errc::parse_error);
  }

  TEST_CASE("text entries") {
    CHECK(entry_from_text("hello").sub_entries.size() == 1);
    CHECK(testing::error_code([] { entry_from_text(" \n\t"); }) == Errc::empty_input);
    CHECK(trim("  a b \n") == "a b");
  }

  TEST_CASE("probability json has all labels") {
    const json j = to_json(LabelProbs{});
    CHECK(j["topic_probs"].size() == kTopicCount);
    CHECK(j["emotion_probs"].size() == kEmotionCount);
  }
}
