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

#include "lemotif/styles.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<StyleId, std::string_view>, 12> kStyleNames = {{
    {StyleId::circle_packing, "circle_packing"},
    {StyleId::string_doll, "string_doll"},
    {StyleId::carpet, "carpet"},
    {StyleId::tile, "tile"},
    {StyleId::glass, "glass"},
    {StyleId::b1, "b1"},
    {StyleId::b2, "b2"},
    {StyleId::b3, "b3"},
    {StyleId::b4, "b4"},
    {StyleId::b5, "b5"},
    {StyleId::b6, "b6"},
    {StyleId::b7, "b7"},
}};

ParamSpec integer(std::string n, double lo, double hi, int def, std::string desc) {
  return {std::move(n), ParamType::integer, lo, hi, def, std::move(desc)};
}
ParamSpec real(std::string n, double lo, double hi, double def, std::string desc) {
  return {std::move(n), ParamType::real, lo, hi, def, std::move(desc)};
}
ParamSpec int_list(std::string n, double lo, double hi, json def, std::string desc) {
  return {std::move(n), ParamType::integer_list, lo, hi, std::move(def), std::move(desc)};
}
ParamSpec real_list(std::string n, double lo, double hi, json def, std::string desc) {
  return {std::move(n), ParamType::real_list, lo, hi, std::move(def), std::move(desc)};
}

std::vector<ParamSpec> circle_packing_params() {
  return {
      real_list("radii", 1, 256, json::array({24, 16, 10, 6}),
                "circle radii in px, strictly descending"),
      int_list("counts", 0, 2000, json::array({20, 40, 80, 160}),
               "circles to place per radius (same length as radii)"),
      integer("max_trials", 1, 100000, 500, "random placements tried per circle"),
  };
}

std::vector<ParamSpec> string_doll_params() {
  return {
      integer("n_strokes", 0, 1000, 60, "number of curves"),
      integer("w_min", 1, 64, 4, "minimum stroke width in px"),
      integer("w_max", 1, 64, 10, "maximum stroke width in px"),
      real("sigma_frac", 0, 1, 0.2, "control-point noise deviation as a fraction of the canvas"),
  };
}

std::vector<StyleInfo> make_registry() {
  std::vector<StyleInfo> r;
  r.push_back({StyleId::circle_packing, "non-overlapping circles packed inside the topic shape",
               circle_packing_params()});
  r.push_back({StyleId::string_doll,
               "quadratic curves between outline points with a thin light or dark overlay",
               string_doll_params()});
  r.push_back({StyleId::carpet, "grid cells of parallel lines with colored gaps",
               {
                   integer("grid", 1, 64, 4, "cells per side"),
                   int_list("angles", 0, 179, json::array({0, 45, 90, 135}),
                            "line angles in degrees to choose from"),
                   integer("spacing", 2, 512, 12, "distance between parallel lines in px"),
                   integer("thickness", 1, 64, 2, "line thickness in px"),
               }});
  r.push_back({StyleId::tile, "one diagonal per grid cell with colored regions",
               {
                   integer("grid", 1, 128, 8, "cells per side"),
                   real("p_diag", 0, 1, 0.5, "probability of '/' over '\\'"),
                   integer("line_width", 1, 32, 2, "diagonal width in px"),
               }});
  r.push_back({StyleId::glass, "translucent topic icons layered over several passes",
               {
                   integer("passes", 0, 20, 3, "number of passes"),
                   integer("icons_per_pass", 0, 200, 12, "icons placed per pass"),
                   real("scale_min", 0.01, 1, 0.15, "smallest icon side as a fraction of the canvas"),
                   real("scale_max", 0.01, 1, 0.45, "largest icon side as a fraction of the canvas"),
                   integer("alpha_min", 0, 255, 80, "lowest icon opacity"),
                   integer("alpha_max", 0, 255, 180, "highest icon opacity"),
               }});
  r.push_back({StyleId::b1, "circle packing on a square", circle_packing_params(), true});
  r.push_back({StyleId::b2, "string doll on a square", string_doll_params(), true});
  r.push_back({StyleId::b3, "topic shape split into solid emotion-colored bands", {}});
  r.push_back({StyleId::b4, "square split into solid emotion-colored bands", {}, true});
  r.push_back({StyleId::b5, "topic shape in the majority valence color", {}, false, true});
  r.push_back({StyleId::b6, "square in the majority valence color", {}, true, true});
  r.push_back({StyleId::b7, "one square for the whole day in the majority valence color", {}, true,
               true, true});
  return r;
}

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw Error(Errc::invalid_argument, "params." + field + ": " + msg, "params." + field);
}

bool is_integral(const json& v) {
  if (v.is_number_integer()) return true;
  if (!v.is_number_float()) return false;
  const double d = v.get<double>();
  return std::isfinite(d) && d == std::floor(d);
}

json check_scalar(const ParamSpec& spec, const json& v, const std::string& field) {
  const bool want_int = spec.type == ParamType::integer || spec.type == ParamType::integer_list;
  if (!v.is_number() || v.is_boolean()) bad(field, "expected a number");
  if (want_int && !is_integral(v)) bad(field, "expected an integer");
  const double d = v.get<double>();
  if (!std::isfinite(d) || d < spec.min || d > spec.max) {
    std::ostringstream os;
    os << "value " << d << " outside [" << spec.min << ", " << spec.max << "]";
    bad(field, os.str());
  }
  return want_int ? json(static_cast<long long>(d)) : json(d);
}

json check_value(const ParamSpec& spec, const json& v) {
  if (spec.type == ParamType::integer || spec.type == ParamType::real)
    return check_scalar(spec, v, spec.name);
  if (!v.is_array()) bad(spec.name, "expected an array");
  if (v.size() < spec.min_items || v.size() > spec.max_items)
    bad(spec.name, "expected " + std::to_string(spec.min_items) + " to " +
                       std::to_string(spec.max_items) + " items");
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(check_scalar(spec, v[i], spec.name + "[" + std::to_string(i) + "]"));
  return out;
}

void check_cross_fields(StyleId id, const json& p) {
  switch (id) {
    case StyleId::circle_packing:
    case StyleId::b1: {
      const auto& radii = p["radii"];
      if (radii.size() != p["counts"].size()) bad("counts", "must have one count per radius");
      for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i].get<double>() < radii[i - 1].get<double>()))
          bad("radii", "must be strictly descending");
      break;
    }
    case StyleId::string_doll:
    case StyleId::b2:
      if (p["w_min"].get<int>() > p["w_max"].get<int>()) bad("w_max", "must be >= w_min");
      break;
    case StyleId::carpet:
      if (p["thickness"].get<int>() >= p["spacing"].get<int>())
        bad("thickness", "must be smaller than spacing");
      break;
    case StyleId::glass:
      if (p["scale_min"].get<double>() > p["scale_max"].get<double>())
        bad("scale_max", "must be >= scale_min");
      if (p["alpha_min"].get<int>() > p["alpha_max"].get<int>())
        bad("alpha_max", "must be >= alpha_min");
      break;
    default:
      break;
  }
}

}  // namespace

std::string_view name(StyleId s) noexcept {
  for (const auto& [id, n] : kStyleNames)
    if (id == s) return n;
  return "";
}

std::optional<StyleId> parse_style(std::string_view s) noexcept {
  for (const auto& [id, n] : kStyleNames)
    if (n == s) return id;
  return std::nullopt;
}

std::string_view name(ParamType t) noexcept {
  switch (t) {
    case ParamType::integer: return "integer";
    case ParamType::real: return "real";
    case ParamType::integer_list: return "integer_list";
    case ParamType::real_list: return "real_list";
  }
  return "";
}

const std::vector<StyleInfo>& style_registry() {
  static const std::vector<StyleInfo> registry = make_registry();
  return registry;
}

const StyleInfo& style_info(StyleId id) {
  for (const auto& info : style_registry())
    if (info.id == id) return info;
  throw Error(Errc::unsupported_style, "unknown style id");
}

json resolve_params(StyleId id, const json& overrides) {
  const StyleInfo& info = style_info(id);
  if (!overrides.is_null() && !overrides.is_object())
    throw Error(Errc::invalid_argument, "params must be a JSON object", "params");
  if (overrides.is_object()) {
    for (const auto& [key, _] : overrides.items()) {
      bool known = false;
      for (const auto& spec : info.params) known = known || spec.name == key;
      if (!known) bad(key, "unknown parameter for style " + std::string(name(id)));
    }
  }
  json out = json::object();
  for (const auto& spec : info.params) {
    const bool given = overrides.is_object() && overrides.contains(spec.name);
    out[spec.name] = check_value(spec, given ? overrides[spec.name] : spec.default_value);
  }
  check_cross_fields(id, out);
  return out;
}

json registry_json() {
  json styles = json::array();
  for (const auto& info : style_registry()) {
    json params = json::array();
    for (const auto& spec : info.params) {
      json p = {{"name", spec.name},
                {"type", name(spec.type)},
                {"min", spec.min},
                {"max", spec.max},
                {"default", spec.default_value},
                {"description", spec.description}};
      if (spec.type == ParamType::integer_list || spec.type == ParamType::real_list) {
        p["min_items"] = spec.min_items;
        p["max_items"] = spec.max_items;
      }
      params.push_back(std::move(p));
    }
    styles.push_back({{"id", name(info.id)},
                      {"description", info.description},
                      {"square_shape", info.square_shape},
                      {"valence_colors", info.valence_colors},
                      {"whole_entry", info.whole_entry},
                      {"params", params}});
  }
  return {{"styles", styles}};
}

CirclePackingParams CirclePackingParams::from_json(const json& p) {
  return {p.at("radii").get<std::vector<double>>(), p.at("counts").get<std::vector<int>>(),
          p.at("max_trials").get<int>()};
}

StringDollParams StringDollParams::from_json(const json& p) {
  return {p.at("n_strokes").get<int>(), p.at("w_min").get<int>(), p.at("w_max").get<int>(),
          p.at("sigma_frac").get<double>()};
}

CarpetParams CarpetParams::from_json(const json& p) {
  return {p.at("grid").get<int>(), p.at("angles").get<std::vector<int>>(),
          p.at("spacing").get<int>(), p.at("thickness").get<int>()};
}

TileParams TileParams::from_json(const json& p) {
  return {p.at("grid").get<int>(), p.at("p_diag").get<double>(), p.at("line_width").get<int>()};
}

GlassParams GlassParams::from_json(const json& p) {
  return {p.at("passes").get<int>(),       p.at("icons_per_pass").get<int>(),
          p.at("scale_min").get<double>(), p.at("scale_max").get<double>(),
          p.at("alpha_min").get<int>(),    p.at("alpha_max").get<int>()};
}

}  // namespace lemotif
