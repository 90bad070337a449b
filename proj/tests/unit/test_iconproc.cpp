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

#include <cstdlib>
#include <filesystem>

#include "helpers.hpp"
#include "lemotif/image_io.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/raster.hpp"
#include "oracles.hpp"

using namespace lemotif;

namespace {

RasterMask rect(int w, int h, int x0, int y0, int x1, int y1) {
  RasterMask m(w, h);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) m.set(x, y);
  return m;
}

// Random masks that tend to contain blobs rather than salt-and-pepper.
RasterMask blobby(Rng& rng, int w, int h) {
  RasterMask m(w, h);
  const int blobs = 1 + static_cast<int>(rng.below(4));
  for (int b = 0; b < blobs; ++b) {
    const int x0 = static_cast<int>(rng.below(w)), y0 = static_cast<int>(rng.below(h));
    const int x1 = std::min(w - 1, x0 + static_cast<int>(rng.below(w)));
    const int y1 = std::min(h - 1, y0 + static_cast<int>(rng.below(h)));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) m.set(x, y);
  }
  return m;
}

}  // namespace

TEST_SUITE("iconproc") {
  TEST_CASE("binarize") {
    CHECK(binarize(GrayImage(4, 3, 0)).count() == 12);
    CHECK(binarize(GrayImage(4, 3, 255)).count() == 0);
    GrayImage g(2, 1);
    g.pixels = {10, 200};
    const RasterMask m = binarize(g, 128);
    CHECK(m.at(0, 0));
    CHECK_FALSE(m.at(1, 0));
    CHECK(testing::error_code([] { binarize(GrayImage()); }) == Errc::empty_image);
  }

  TEST_CASE("crop recenter resize") {
    RasterMask one(9, 9);
    one.set(2, 7);
    const RasterMask out = crop_recenter_resize(one, 100);
    CHECK(out == rect(100, 100, 5, 5, 94, 94));

    const RasterMask blob = rect(64, 64, 2, 40, 11, 45);
    const RasterMask r = crop_recenter_resize(blob, 64);
    int x0 = 64, x1 = -1, y0 = 64, y1 = -1;
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x)
        if (r.at(x, y)) {
          x0 = std::min(x0, x); x1 = std::max(x1, x);
          y0 = std::min(y0, y); y1 = std::max(y1, y);
        }
    CHECK(std::abs((x0 + x1) / 2.0 - 31.5) <= 1.0);
    CHECK(std::abs((y0 + y1) / 2.0 - 31.5) <= 1.0);
    CHECK(x1 - x0 + 1 == 57);

    const RasterMask canonical = square_mask(64, 57);
    CHECK(crop_recenter_resize(canonical, 64) == canonical);
    CHECK(testing::error_code([] { crop_recenter_resize(RasterMask(5, 5), 10); }) == Errc::empty_mask);
  }

  TEST_CASE("extreme point outline examples") {
    RasterMask border = rect(7, 5, 1, 1, 5, 3);
    RasterMask inner = rect(7, 5, 2, 2, 4, 2);
    CHECK(extreme_point_outline(border) == (border & ~inner));
    RasterMask dot(3, 3);
    dot.set(1, 1);
    CHECK(extreme_point_outline(dot) == dot);
    RasterMask plus(3, 3);
    for (auto [x, y] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) plus.set(x, y);
    CHECK(extreme_point_outline(plus) == oracle::outline(plus));
  }

  TEST_CASE("dilate examples") {
    CHECK_FALSE(dilate(RasterMask(6, 6), 2).any());
    RasterMask c(5, 5);
    c.set(2, 2);
    CHECK(dilate(c, 1) == rect(5, 5, 1, 1, 3, 3));
    RasterMask two(9, 5);
    two.set(2, 2);
    two.set(5, 2);
    const RasterMask d = dilate(two, 1);
    CHECK(d.count() == 18);
    CHECK(count_components4(d) == 1);  // adjacent columns 3 and 4 touch
    RasterMask apart(10, 5);
    apart.set(2, 2);
    apart.set(6, 2);
    CHECK(count_components4(dilate(apart, 1)) == 2);
  }

  TEST_CASE("fill interior examples") {
    const RasterMask solid = rect(12, 10, 2, 2, 9, 7);
    const RasterMask hollow = solid & ~rect(12, 10, 3, 3, 8, 6);
    CHECK(fill_interior(hollow) == solid);
    CHECK(testing::error_code([] { fill_interior(RasterMask(8, 8)); }) == Errc::open_outline);

    RasterMask ring(11, 11);
    for (int y = 0; y < 11; ++y)
      for (int x = 0; x < 11; ++x) {
        const int d2 = (x - 5) * (x - 5) + (y - 5) * (y - 5);
        if (d2 <= 16 && d2 >= 6) ring.set(x, y);
      }
    const RasterMask disk = fill_interior(ring);
    CHECK(disk == *oracle::fill(ring, kDefaultLeakFraction));
    CHECK(disk.at(5, 5));
    CHECK(ring.subset_of(disk));
  }

  TEST_CASE("outline, dilate and fill match oracles on random masks") {
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
      const int w = 1 + static_cast<int>(rng.below(24));
      const int h = 1 + static_cast<int>(rng.below(24));
      const RasterMask m = trial % 2 ? blobby(rng, w, h) : testing::random_mask(rng, w, h, 0.35);
      if (m.any()) {
        const RasterMask o = extreme_point_outline(m);
        CHECK(o == oracle::outline(m));
        CHECK(o.subset_of(m));
      }
      const int r = 1 + static_cast<int>(rng.below(3));
      const RasterMask d = dilate(m, r);
      CHECK(d == oracle::dilate(m, r));
      CHECK(m.subset_of(d));

      const auto want = oracle::fill(m, kDefaultLeakFraction);
      if (want) {
        const RasterMask got = fill_interior(m);
        CHECK(got == *want);
        CHECK(m.subset_of(got));
      } else {
        CHECK(testing::error_code([&] { fill_interior(m); }) == Errc::open_outline);
      }
    }
  }

  TEST_CASE("dilate is monotone") {
    Rng rng(78);
    for (int trial = 0; trial < 50; ++trial) {
      const RasterMask a = testing::random_mask(rng, 20, 20, 0.1);
      const RasterMask b = a | testing::random_mask(rng, 20, 20, 0.1);
      CHECK(dilate(a, 2).subset_of(dilate(b, 2)));
    }
  }

  TEST_CASE("solid square icon covers about 81 percent") {
    GrayImage icon(100, 100, 255);
    for (int y = 20; y < 70; ++y)
      for (int x = 30; x < 80; ++x) icon.at(x, y) = 0;
    const ShapeMask s = build_shape(Topic::work, icon);
    const double frac = static_cast<double>(s.interior.count()) / (512.0 * 512.0);
    CHECK(std::abs(frac - 0.81) <= 0.02);
    CHECK(s.outline.subset_of(s.interior));
    CHECK(count_components4(s.interior) == 1);

    const ShapeMask again = build_shape(Topic::work, icon);
    CHECK(again.interior == s.interior);
    CHECK(again.outline == s.outline);
  }

  TEST_CASE("blank icon fails at crop") {
    try {
      build_shape(Topic::god, GrayImage(50, 50, 255));
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::empty_mask);
      CHECK(e.detail() == "crop");
    }
  }

  TEST_CASE("bundled shapes are closed single regions") {
    const ShapeLibrary& lib = testing::shapes();
    CHECK(lib.size() == kTopicCount);
    for (Topic t : kAllTopics) {
      const ShapeMask& s = lib.get(t);
      CHECK(s.interior.width() == kDefaultCanvasSize);
      CHECK(count_components4(s.interior) == 1);
      CHECK(s.outline.subset_of(s.interior));
    }
  }

  TEST_CASE("bundled sleep icon runs through the pipeline") {
    const auto bytes = read_file(testing::data_dir() / "icons" / "sleep.png");
    const ShapeMask s = build_shape(Topic::sleep, decode_png_gray(bytes));
    CHECK(count_components4(s.interior) == 1);
    CHECK(s.interior == testing::shapes().get(Topic::sleep).interior);
  }

  TEST_CASE("library save and load round-trip") {
    const auto dir = std::filesystem::temp_directory_path() / "lemotif_lib_test";
    std::filesystem::remove_all(dir);
    ShapeLibrary lib;
    GrayImage icon(40, 40, 255);
    for (int y = 5; y < 30; ++y)
      for (int x = 10; x < 35; ++x) icon.at(x, y) = 0;
    lib.put(build_shape(Topic::love, icon, 64));
    lib.save(dir);
    const ShapeLibrary back = ShapeLibrary::load(dir);
    CHECK(back.size() == 1);
    CHECK(back.get(Topic::love).interior == lib.get(Topic::love).interior);
    CHECK(testing::error_code([&] { back.get(Topic::god); }) == Errc::shape_missing);
    CHECK(testing::error_code([&] { ShapeLibrary::load(dir / "nope"); }) == Errc::shape_missing);
    std::filesystem::remove_all(dir);
  }
}
