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

#include <set>

#include "helpers.hpp"
#include "lemotif/styles.hpp"

using namespace lemotif;
using nlohmann::json;

namespace {

std::string bad_field(StyleId id, const json& overrides) {
  try {
    resolve_params(id, overrides);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
    return e.detail();
  }
  FAIL("expected invalid_argument");
  return {};
}

}  // namespace

TEST_SUITE("styles") {
  TEST_CASE("registry contents") {
    std::set<std::string> ids;
    for (const auto& info : style_registry()) ids.insert(std::string(name(info.id)));
    CHECK(ids == std::set<std::string>{"circle_packing", "string_doll", "carpet", "tile", "glass",
                                       "b1", "b2", "b3", "b4", "b5", "b6", "b7"});
    CHECK_FALSE(parse_style("autoencoder").has_value());
    CHECK(testing::error_code([] { style_info(static_cast<StyleId>(99)); }) ==
          Errc::unsupported_style);
    CHECK(style_info(StyleId::b7).whole_entry);
    CHECK(style_info(StyleId::b6).square_shape);
    CHECK(style_info(StyleId::b5).valence_colors);
    CHECK_FALSE(style_info(StyleId::b5).square_shape);
  }

  TEST_CASE("defaults resolve and parse") {
    for (const auto& info : style_registry()) {
      const json p = resolve_params(info.id, json::object());
      CHECK(p.size() == info.params.size());
      CHECK(resolve_params(info.id, nullptr) == p);
      CHECK(resolve_params(info.id, p) == p);
    }
    const auto cp = CirclePackingParams::from_json(resolve_params(StyleId::circle_packing, {}));
    CHECK(cp.radii == std::vector<double>{24, 16, 10, 6});
    CHECK(cp.counts.size() == 4);
    const auto tile = TileParams::from_json(resolve_params(StyleId::tile, {{"p_diag", 1}}));
    CHECK(tile.p_diag == 1.0);
    CHECK(tile.grid == 8);
    const auto carpet = CarpetParams::from_json(resolve_params(StyleId::carpet, {}));
    CHECK(carpet.angles == std::vector<int>{0, 45, 90, 135});
  }

  TEST_CASE("registry json mirrors the registry") {
    const json j = registry_json();
    REQUIRE(j["styles"].size() == style_registry().size());
    for (const auto& s : j["styles"]) {
      const auto id = parse_style(s["id"].get<std::string>());
      REQUIRE(id);
      json defaults = json::object();
      for (const auto& p : s["params"]) defaults[p["name"].get<std::string>()] = p["default"];
      CHECK_NOTHROW(resolve_params(*id, defaults));
    }
  }

  TEST_CASE("validation names the parameter") {
    CHECK(bad_field(StyleId::tile, {{"grid", 0}}) == "params.grid");
    CHECK(bad_field(StyleId::tile, {{"grid", 2.5}}) == "params.grid");
    CHECK(bad_field(StyleId::tile, {{"p_diag", "half"}}) == "params.p_diag");
    CHECK(bad_field(StyleId::tile, {{"color", 1}}) == "params.color");
    CHECK(bad_field(StyleId::circle_packing, {{"radii", {10, 20}}, {"counts", {1, 1}}}) == "params.radii");
    CHECK(bad_field(StyleId::circle_packing, {{"radii", {10}}}) == "params.counts");
    CHECK(bad_field(StyleId::circle_packing, {{"radii", json::array()}, {"counts", json::array()}}) ==
          "params.radii");
    CHECK(bad_field(StyleId::string_doll, {{"w_min", 9}, {"w_max", 3}}) == "params.w_max");
    CHECK(bad_field(StyleId::carpet, {{"spacing", 4}, {"thickness", 4}}) == "params.thickness");
    CHECK(bad_field(StyleId::glass, {{"alpha_min", 200}, {"alpha_max", 100}}) == "params.alpha_max");
    CHECK(bad_field(StyleId::carpet, {{"angles", {0, 180}}}) == "params.angles[1]");
    CHECK(bad_field(StyleId::b5, {{"anything", 1}}) == "params.anything");
    CHECK(testing::error_code([] { resolve_params(StyleId::tile, json::array()); }) ==
          Errc::invalid_argument);
  }

  TEST_CASE("integral floats are accepted as integers") {
    CHECK(resolve_params(StyleId::tile, {{"grid", 4.0}})["grid"] == 4);
  }
}
