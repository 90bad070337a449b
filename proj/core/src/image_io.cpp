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

#include "lemotif/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

struct PngImage {
  png_image image;
  PngImage() {
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

Bytes write_png(const void* pixels, int width, int height, png_uint_32 format) {
  PngImage png;
  png.image.width = static_cast<png_uint_32>(width);
  png.image.height = static_cast<png_uint_32>(height);
  png.image.format = format;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png.image, nullptr, &size, 0, pixels, 0, nullptr))
    throw Error(Errc::io_error, std::string("png encode: ") + png.image.message);
  Bytes out(size);
  if (!png_image_write_to_memory(&png.image, out.data(), &size, 0, pixels, 0, nullptr))
    throw Error(Errc::io_error, std::string("png encode: ") + png.image.message);
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> read_png_rgba(std::span<const std::uint8_t> bytes, int& width,
                                        int& height) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, bytes.data(), bytes.size()))
    throw Error(Errc::parse_error, std::string("png decode: ") + png.image.message);
  png.image.format = PNG_FORMAT_RGBA;
  width = static_cast<int>(png.image.width);
  height = static_cast<int>(png.image.height);
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, buf.data(), 0, nullptr))
    throw Error(Errc::parse_error, std::string("png decode: ") + png.image.message);
  return buf;
}

// Skips whitespace and '#' comments in a netpbm header.
std::size_t skip_ws(std::span<const std::uint8_t> b, std::size_t i) {
  while (i < b.size()) {
    if (b[i] == '#') {
      while (i < b.size() && b[i] != '\n') ++i;
    } else if (std::isspace(b[i])) {
      ++i;
    } else {
      break;
    }
  }
  return i;
}

int read_int(std::span<const std::uint8_t> b, std::size_t& i) {
  i = skip_ws(b, i);
  if (i >= b.size() || !std::isdigit(b[i])) throw Error(Errc::parse_error, "pbm: bad header");
  long v = 0;
  while (i < b.size() && std::isdigit(b[i])) {
    v = v * 10 + (b[i] - '0');
    if (v > (1 << 20)) throw Error(Errc::parse_error, "pbm: dimension too large");
    ++i;
  }
  return static_cast<int>(v);
}

}  // namespace

Bytes encode_png(const Canvas& canvas) {
  static_assert(sizeof(Rgba) == 4);
  return write_png(canvas.pixels().data(), canvas.width(), canvas.height(), PNG_FORMAT_RGBA);
}

Canvas decode_png(std::span<const std::uint8_t> bytes) {
  int w = 0, h = 0;
  const auto buf = read_png_rgba(bytes, w, h);
  Canvas c(w, h);
  for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i)
    c.at(i) = Rgba{buf[4 * i], buf[4 * i + 1], buf[4 * i + 2], buf[4 * i + 3]};
  return c;
}

GrayImage decode_png_gray(std::span<const std::uint8_t> bytes) {
  int w = 0, h = 0;
  const auto buf = read_png_rgba(bytes, w, h);
  GrayImage g(w, h);
  for (std::size_t i = 0; i < g.pixels.size(); ++i) {
    const std::uint8_t a = buf[4 * i + 3];
    const int r = blend_channel(buf[4 * i], 255, a);
    const int gr = blend_channel(buf[4 * i + 1], 255, a);
    const int b = blend_channel(buf[4 * i + 2], 255, a);
    g.pixels[i] = static_cast<std::uint8_t>((r * 299 + gr * 587 + b * 114) / 1000);
  }
  return g;
}

Bytes encode_png_gray(const GrayImage& image) {
  return write_png(image.pixels.data(), image.width, image.height, PNG_FORMAT_GRAY);
}

Bytes encode_pbm(const RasterMask& mask) {
  const std::string header =
      "P4\n" + std::to_string(mask.width()) + " " + std::to_string(mask.height()) + "\n";
  Bytes out(header.begin(), header.end());
  const int row_bytes = (mask.width() + 7) / 8;
  for (int y = 0; y < mask.height(); ++y) {
    for (int bx = 0; bx < row_bytes; ++bx) {
      std::uint8_t byte = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int x = bx * 8 + bit;
        if (x < mask.width() && mask.at(x, y)) byte |= static_cast<std::uint8_t>(0x80 >> bit);
      }
      out.push_back(byte);
    }
  }
  return out;
}

RasterMask decode_pbm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '4')
    throw Error(Errc::parse_error, "pbm: not a P4 file");
  std::size_t i = 2;
  const int w = read_int(bytes, i);
  const int h = read_int(bytes, i);
  if (i >= bytes.size() || !std::isspace(bytes[i])) throw Error(Errc::parse_error, "pbm: bad header");
  ++i;
  const std::size_t row_bytes = static_cast<std::size_t>(w + 7) / 8;
  if (bytes.size() - i < row_bytes * static_cast<std::size_t>(h))
    throw Error(Errc::parse_error, "pbm: truncated raster");
  RasterMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (bytes[i + y * row_bytes + x / 8] & (0x80 >> (x % 8))) m.set(x, y);
  return m;
}

Bytes encode_ppm(const Canvas& canvas) {
  const std::string header =
      "P6\n" + std::to_string(canvas.width()) + " " + std::to_string(canvas.height()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + canvas.pixels().size() * 3);
  for (const Rgba& p : canvas.pixels()) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace lemotif
