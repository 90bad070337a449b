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

#include "helpers.hpp"
#include "lemotif/compose.hpp"
#include "lemotif/font.hpp"
#include "oracles.hpp"

using namespace lemotif;

namespace {

const std::vector<LabelSet> kThree{{Topic::exercise, {Emotion::proud, Emotion::excited}},
                                   {Topic::family, {Emotion::happy}},
                                   {Topic::sleep, {Emotion::anxious, Emotion::frustrated}}};

EntryRender entry(std::span<const LabelSet> sets, EntryOptions opt = {}) {
  return render_entry(sets, opt, testing::shapes(), default_palette());
}

}  // namespace

TEST_SUITE("compose") {
  TEST_CASE("captions") {
    CHECK(caption_for({Topic::work, {Emotion::happy, Emotion::calm}}) == "work: happy, calm");
    CHECK(caption_for({std::nullopt, {Emotion::sad}}) == "general: sad");
    CHECK(caption_for({Topic::god, {}}) == "god: (no feelings detected)");
  }

  TEST_CASE("caption strip holds the exact glyph raster") {
    const std::string text = "work: happy";
    const Canvas strip = caption_strip(text, 512);
    const int scale = 2;
    const int width = (static_cast<int>(text.size()) * 6 - 1) * scale;
    const int x0 = (512 - width) / 2;
    const int y0 = (kCaptionHeight - 7 * scale) / 2;
    Canvas expected(512, kCaptionHeight, opaque(kBackgroundColor));
    for (std::size_t k = 0; k < text.size(); ++k) {
      const auto& g = font::glyph(text[k]);
      for (int row = 0; row < 7; ++row)
        for (int col = 0; col < 5; ++col)
          if ((g[row] >> (4 - col)) & 1)
            for (int d = 0; d < scale * scale; ++d)
              expected.at(x0 + static_cast<int>(k) * 6 * scale + col * scale + d % scale,
                          y0 + row * scale + d / scale) = opaque(kCaptionColor);
    }
    CHECK(strip == expected);
    CHECK(font::glyph('w') == font::glyph('W'));
  }

  TEST_CASE("long captions drop to the small font") {
    const std::string text = "recreation: frustrated, disgusted, embarrassed, nostalgic";
    const Canvas strip = caption_strip(text, 256);
    std::size_t ink = 0;
    for (const Rgba& p : strip.pixels()) ink += p.rgb() == kCaptionColor;
    CHECK(ink > 0);
    CHECK(font::text_width(text, 2) > 256);
  }

  TEST_CASE("assembly arithmetic") {
    const EntryRender three = entry(kThree);
    CHECK(three.image.width() == 3 * 512 + 2 * 16);
    CHECK(three.image.height() == 512 + kCaptionHeight);
    CHECK(three.panels.size() == 3);

    EntryOptions bare;
    bare.captions = false;
    const EntryRender one = entry(std::span(kThree).first(1), bare);
    CHECK(one.image.width() == 512);
    CHECK(one.image.height() == 512);
    CHECK(one.image == one.panels[0].image);
    CHECK(testing::error_code([] { assemble_entry({}, true); }) == Errc::invalid_argument);
  }

  TEST_CASE("panels are placed side by side") {
    const EntryRender r = entry(kThree);
    for (std::size_t i = 0; i < 3; ++i)
      for (int y = 0; y < 512; y += 7)
        for (int x = 0; x < 512; x += 7)
          CHECK(r.image.at(static_cast<int>(i) * 528 + x, y) == r.panels[i].image.at(x, y));
  }

  TEST_CASE("entries are deterministic") {
    EntryOptions opt;
    opt.style = StyleId::string_doll;
    CHECK(entry(kThree, opt).image == entry(kThree, opt).image);
    opt.seed = 7;
    const EntryRender r = entry(kThree, opt);
    CHECK(r.panel_seeds[1] == derive_seed(7, 1));
  }

  TEST_CASE("fallback panels") {
    const std::vector<LabelSet> sets{{std::nullopt, {Emotion::happy}}, {Topic::god, {}}};
    const EntryRender r = entry(sets);
    CHECK(r.panels[0].caption == "general: happy");
    const ShapeMask& sq = shared_square_shape(512, kDefaultDilationRadius);
    CHECK(oracle::pixels_outside(r.panels[0].image, sq.interior, kBackgroundColor) == 0);
    CHECK(r.panels[1].image == blank_panel(testing::shapes().get(Topic::god)));
    CHECK(r.panels[1].caption == "god: (no feelings detected)");
  }

  TEST_CASE("whole-day baseline") {
    EntryOptions opt;
    opt.style = StyleId::b7;
    const EntryRender r = entry(kThree, opt);
    REQUIRE(r.panels.size() == 1);
    CHECK(r.image.width() == 512);
    // proud, excited, happy positive; anxious, frustrated negative
    CHECK(r.panels[0].caption == "day: positive");
    CHECK(r.image.at(256, 256).rgb() == default_palette().color(Valence::positive));
  }

  TEST_CASE("sidecar") {
    EntryOptions opt;
    opt.seed = 18446744073709551615ULL;
    const EntryRender r = entry(kThree, opt);
    const auto j = sidecar_json(r, kThree, opt);
    CHECK(j["seed"] == "18446744073709551615");
    CHECK(j["width"] == 1568);
    CHECK(j["label_sets"].size() == 3);
    CHECK(j["label_sets"][2]["topic"] == "sleep");
    CHECK(j["panels"][0]["caption"] == "exercise: proud, excited");
    CHECK(j["params"]["max_trials"] == 500);
  }

  TEST_CASE("label set count limits") {
    const std::vector<LabelSet> four(4, LabelSet{Topic::god, {Emotion::calm}});
    CHECK(testing::error_code([&] { entry(four); }) == Errc::invalid_argument);
    CHECK(testing::error_code([] { entry({}); }) == Errc::invalid_argument);
  }
}
