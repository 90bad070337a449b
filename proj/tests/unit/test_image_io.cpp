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

#include <filesystem>

#include "helpers.hpp"
#include "lemotif/image_io.hpp"

using namespace lemotif;

TEST_SUITE("image_io") {
  TEST_CASE("png round-trip") {
    Rng rng(1);
    Canvas c(17, 5);
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 17; ++x)
        c.at(x, y) = Rgba{static_cast<std::uint8_t>(rng.below(256)),
                          static_cast<std::uint8_t>(rng.below(256)),
                          static_cast<std::uint8_t>(rng.below(256)), 255};
    const Bytes png = encode_png(c);
    REQUIRE(png.size() > 8);
    const Bytes signature{0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A};
    CHECK(Bytes(png.begin(), png.begin() + 8) == signature);
    CHECK(decode_png(png) == c);
  }

  TEST_CASE("full-size canvas round-trip") {
    Canvas c(512, 512);
    for (int y = 0; y < 512; ++y)
      for (int x = 0; x < 512; ++x)
        c.at(x, y) = Rgba{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                          static_cast<std::uint8_t>(x ^ y), 255};
    CHECK(decode_png(encode_png(c)) == c);
  }

  TEST_CASE("gray png and pbm round-trip") {
    Rng rng(2);
    GrayImage g(9, 7);
    for (auto& p : g.pixels) p = static_cast<std::uint8_t>(rng.below(256));
    const GrayImage back = decode_png_gray(encode_png_gray(g));
    CHECK(back.width == 9);
    CHECK(back.pixels == g.pixels);

    const RasterMask m = testing::random_mask(rng, 13, 6, 0.5);
    CHECK(decode_pbm(encode_pbm(m)) == m);
  }

  TEST_CASE("garbage input is a parse error") {
    const Bytes junk{'n', 'o', 'p', 'e'};
    CHECK(testing::error_code([&] { decode_png(junk); }) == Errc::parse_error);
    CHECK(testing::error_code([&] { decode_pbm(junk); }) == Errc::parse_error);
  }

  TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "lemotif_io_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "a.txt", std::string("hello"));
    const Bytes b = read_file(dir / "a.txt");
    CHECK(std::string(b.begin(), b.end()) == "hello");
    CHECK(testing::error_code([&] { read_file(dir / "missing.bin"); }) == Errc::io_error);
    std::filesystem::remove_all(dir);
  }
}
