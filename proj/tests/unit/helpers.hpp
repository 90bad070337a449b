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

#include <filesystem>
#include <string>

#include <doctest.h>

#include "lemotif/error.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/rng.hpp"

namespace testing {

inline std::filesystem::path fixtures() { return LEMOTIF_FIXTURES; }
inline std::filesystem::path data_dir() { return LEMOTIF_TEST_DATA; }

inline const lemotif::ShapeLibrary& shapes() {
  static const lemotif::ShapeLibrary lib = lemotif::ShapeLibrary::load(data_dir() / "shapes");
  return lib;
}

inline lemotif::RasterMask random_mask(lemotif::Rng& rng, int w, int h, double density) {
  lemotif::RasterMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (rng.bernoulli(density)) m.set(x, y);
  return m;
}

/// Runs `f` and returns the lemotif::Error code it throws.
template <class F>
lemotif::Errc error_code(F&& f) {
  try {
    f();
  } catch (const lemotif::Error& e) {
    return e.code();
  }
  FAIL("expected lemotif::Error");
  return lemotif::Errc::invalid_argument;
}

}  // namespace testing
