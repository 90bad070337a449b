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
#include <string_view>

#include "lemotif/render.hpp"

namespace lemotif::font {

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;
inline constexpr int kAdvance = 6;

/// Seven rows, bit 4 is the leftmost column. Lowercase letters fold to
/// uppercase; characters without a glyph render as '?'.
using Glyph = std::array<std::uint8_t, kGlyphHeight>;

const Glyph& glyph(char c) noexcept;

int text_width(std::string_view text, int scale) noexcept;

/// Draws `text` with its top-left at (x, y); each font pixel becomes a
/// scale x scale block. Pixels off the canvas are skipped.
void draw_text(Canvas& canvas, int x, int y, std::string_view text, Rgb color, int scale);

}  // namespace lemotif::font
