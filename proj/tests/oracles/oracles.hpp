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

// Deliberately naive reference implementations. Nothing here shares code with
// the library beyond its plain data types.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lemotif/classify.hpp"
#include "lemotif/eval.hpp"
#include "lemotif/motifs.hpp"
#include "lemotif/raster.hpp"

namespace oracle {

using lemotif::RasterMask;

RasterMask outline(const RasterMask& m);
RasterMask dilate(const RasterMask& m, int radius);
/// nullopt when the border flood reaches at least `leak` of the open pixels.
std::optional<RasterMask> fill(const RasterMask& outline, double leak);
/// Each region as a sorted pixel-index set; regions sorted by first index.
std::vector<std::vector<std::int32_t>> regions(const RasterMask& mask, const RasterMask& barriers);
std::vector<std::int64_t> squared_edt(const RasterMask& m);

lemotif::LabelSet select(const lemotif::LabelProbs& p, double threshold);

/// Directed 3-cycles, each rotated so the smallest item is first.
std::set<std::array<int, 3>> three_cycles(const lemotif::PreferenceMatrix& m);

/// Confusion counts straight from ground-truth label lists and probabilities.
lemotif::ConfusionCounts confusion(const std::vector<lemotif::SubEntry>& samples,
                                   const std::vector<lemotif::LabelProbs>& probs,
                                   const std::vector<std::size_t>& which, double threshold);

/// Every pixel within distance r of the centre is inside `interior`.
bool circle_inside(const RasterMask& interior, double cx, double cy, double r);

/// Number of pixels whose RGB differs from `background` outside `interior`.
std::size_t pixels_outside(const lemotif::Canvas& c, const RasterMask& interior, lemotif::Rgb background);

}  // namespace oracle
