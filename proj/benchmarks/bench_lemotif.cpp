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

#include <benchmark/benchmark.h>

#include "lemotif/classify.hpp"
#include "lemotif/iconproc.hpp"
#include "lemotif/image_io.hpp"
#include "lemotif/motifs.hpp"

using namespace lemotif;

namespace {

const ShapeLibrary& library() {
  static const ShapeLibrary lib = ShapeLibrary::load(LEMOTIF_BENCH_DATA "/shapes");
  return lib;
}

void BM_render(benchmark::State& state) {
  const auto style = static_cast<StyleId>(state.range(0));
  const Palette& pal = default_palette();
  MotifRequest req{style, library().get(Topic::love),
                   {pal.color(Emotion::happy), pal.color(Emotion::calm), pal.color(Emotion::sad)},
                   nlohmann::json::object(), 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_motif(req, library()));
    ++req.seed;
  }
  state.SetLabel(std::string(name(style)));
}
BENCHMARK(BM_render)
    ->Arg(static_cast<int>(StyleId::circle_packing))
    ->Arg(static_cast<int>(StyleId::string_doll))
    ->Arg(static_cast<int>(StyleId::carpet))
    ->Arg(static_cast<int>(StyleId::tile))
    ->Arg(static_cast<int>(StyleId::glass))
    ->Unit(benchmark::kMillisecond);

void BM_build_shape(benchmark::State& state) {
  const RasterMask mask = library().get(Topic::food).interior;
  for (auto _ : state) benchmark::DoNotOptimize(build_shape_from_mask(Topic::food, mask));
}
BENCHMARK(BM_build_shape)->Unit(benchmark::kMillisecond);

void BM_encode_png(benchmark::State& state) {
  const Canvas c = blank_panel(library().get(Topic::god));
  for (auto _ : state) benchmark::DoNotOptimize(encode_png(c));
}
BENCHMARK(BM_encode_png)->Unit(benchmark::kMillisecond);

void BM_score_lexicon(benchmark::State& state) {
  const Lexicon lex = Lexicon::load(LEMOTIF_BENCH_DATA "/lexicon.json");
  const std::string text =
      "slept badly, then a long day at work with a deadline; dinner with family made me happy";
  for (auto _ : state) benchmark::DoNotOptimize(score_lexicon(text, lex));
}
BENCHMARK(BM_score_lexicon);

}  // namespace

BENCHMARK_MAIN();
