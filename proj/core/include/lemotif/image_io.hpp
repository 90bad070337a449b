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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lemotif/raster.hpp"
#include "lemotif/render.hpp"

namespace lemotif {

using Bytes = std::vector<std::uint8_t>;

/// 8-bit RGBA PNG.
Bytes encode_png(const Canvas& canvas);
Canvas decode_png(std::span<const std::uint8_t> bytes);

/// Decodes any PNG to gray: alpha is composited over white, then
/// gray = (299 r + 587 g + 114 b) / 1000.
GrayImage decode_png_gray(std::span<const std::uint8_t> bytes);
Bytes encode_png_gray(const GrayImage& image);

/// Binary PBM (P4); foreground pixels are written as 1 (black).
Bytes encode_pbm(const RasterMask& mask);
RasterMask decode_pbm(std::span<const std::uint8_t> bytes);

/// Binary PPM (P6); alpha is dropped.
Bytes encode_ppm(const Canvas& canvas);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lemotif
