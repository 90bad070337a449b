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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lemotif/classify.hpp"
#include "lemotif/motifs.hpp"

namespace lemotif {

inline constexpr int kDefaultGutter = 16;
inline constexpr int kCaptionHeight = 30;
inline constexpr int kCaptionPad = 8;

struct EntryOptions {
  StyleId style = StyleId::circle_packing;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = kDefaultSeed;
  bool captions = true;
  int gutter = kDefaultGutter;
};

struct EntryRender {
  Canvas image;
  std::vector<Motif> panels;
  std::vector<std::uint64_t> panel_seeds;
  nlohmann::json params;  // fully resolved
};

/// "work: happy, calm"; "general" stands in for a missing topic.
std::string caption_for(const LabelSet& labels);

/// Caption strip for one panel: white, kCaptionHeight tall, text centred.
Canvas caption_strip(const std::string& text, int width);

/// Panels left to right with `gutter` px between them, plus caption strips
/// when `captions` is set. Throws Errc::invalid_argument for an empty list.
Canvas assemble_entry(std::span<const Motif> motifs, bool captions, int gutter = kDefaultGutter);

/// One panel per label set (a single panel for whole-entry styles). Panel i
/// draws from derive_seed(options.seed, i). Panels render concurrently.
EntryRender render_entry(std::span<const LabelSet> label_sets, const EntryOptions& options,
                         const ShapeLibrary& shapes, const Palette& palette);

nlohmann::json sidecar_json(const EntryRender& render, std::span<const LabelSet> label_sets,
                            const EntryOptions& options);

}  // namespace lemotif
