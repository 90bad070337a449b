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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "lemotif/eval.hpp"
#include "lemotif/schema.hpp"
#include "oracles.hpp"

using namespace lemotif;
using nlohmann::json;

namespace {

const Lexicon& bundled() {
  static const Lexicon lex = Lexicon::load(testing::data_dir() / "lexicon.json");
  return lex;
}

std::vector<Entry> dataset() {
  std::ifstream in(testing::fixtures() / "dataset_60.json");
  return dataset_from_json(json::parse(in));
}

PreferenceMatrix random_matrix(Rng& rng, int n) {
  PreferenceMatrix m(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m.set(a, b, rng.bernoulli(0.5) ? a : b);
  return m;
}

PreferenceMatrix from_order(const std::vector<int>& rank) {
  const int n = static_cast<int>(rank.size());
  PreferenceMatrix m(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m.set(a, b, rank[a] < rank[b] ? a : b);
  return m;
}

}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("f1 by hand") {
    CHECK(f1({10, 0, 5, 0}).value == 1.0);
    const Metric zero = f1({0, 4, 10, 3});
    CHECK(zero.value == 0.0);
    CHECK(zero.undefined);
    const Metric m = f1({30, 20, 0, 10});
    CHECK_FALSE(m.undefined);
    CHECK(std::abs(m.value - 2.0 / 3.0) < 1e-12);
    CHECK(f1({0, 0, 7, 0}).undefined);
  }

  TEST_CASE("normalized accuracy by hand") {
    CHECK(normalized_accuracy({5, 0, 5, 0}).value == 1.0);
    CHECK(std::abs(normalized_accuracy({8, 4, 6, 2}).value - 0.7) < 1e-12);
    CHECK(normalized_accuracy({13, 29, 0, 0}).value == 0.5);
    CHECK(normalized_accuracy({3, 0, 0, 1}).undefined);
  }

  TEST_CASE("metrics ignore sample order") {
    Rng rng(6);
    std::vector<std::array<ConfusionCounts, kLabelCount>> rows;
    for (int i = 0; i < 40; ++i) {
      LabelMask p{}, t{};
      for (std::size_t l = 0; l < kLabelCount; ++l) {
        p[l] = rng.bernoulli(0.3);
        t[l] = rng.bernoulli(0.3);
      }
      rows.push_back(per_label_counts(p, t));
    }
    auto total = [&] {
      std::array<ConfusionCounts, kLabelCount> acc{};
      for (const auto& r : rows)
        for (std::size_t l = 0; l < kLabelCount; ++l) acc[l] += r[l];
      return summarize(0.2, acc, Averaging::micro);
    };
    const ThresholdMetrics a = total();
    std::reverse(rows.begin(), rows.end());
    const ThresholdMetrics b = total();
    CHECK(a.f1.value == b.f1.value);
    CHECK(a.normalized_accuracy.value == b.normalized_accuracy.value);
  }

  TEST_CASE("macro averaging skips undefined labels") {
    std::array<ConfusionCounts, kLabelCount> labels{};
    labels[0] = {1, 1, 0, 0};
    labels[1] = {2, 0, 0, 2};
    const ThresholdMetrics m = summarize(0.5, labels, Averaging::macro);
    CHECK(m.f1.undefined);
    CHECK(std::abs(m.f1.value - (0.5 * 1.0 / 1.5 * 2 + 2.0 * 1.0 * 0.5 / 1.5) / 2.0) < 1e-12);
  }

  TEST_CASE("splits") {
    CvOptions opt;
    opt.k_splits = 4;
    opt.seed = 3;
    const auto splits = cv_splits(60, opt);
    REQUIRE(splits.size() == 4);
    for (const auto& s : splits) {
      CHECK(s.size() == 12);
      CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 12);
      CHECK(*std::max_element(s.begin(), s.end()) < 60);
    }
    CHECK(splits[0] != splits[1]);
    CHECK(cv_splits(60, opt) == splits);
    opt.split_frac = 1.0;
    CHECK(testing::error_code([&] { cv_splits(60, opt); }) == Errc::invalid_argument);
    opt.split_frac = 0.001;
    CHECK(cv_splits(60, opt)[0].size() == 1);
  }

  TEST_CASE("cross validation matches a direct count") {
    const auto entries = dataset();
    const auto samples = labeled_samples(entries);
    std::vector<SubEntry> subs;
    for (const auto& e : entries)
      for (const auto& s : e.sub_entries) subs.push_back(s);
    REQUIRE(subs.size() == samples.size());
    const LexiconClassifier clf(bundled());
    std::vector<LabelProbs> probs;
    for (const auto& s : subs) probs.push_back(clf.score(s.text));

    CvOptions opt;
    opt.thresholds = {0.1, 0.2, 0.5, 0.9};
    const auto metrics = cross_validate(samples, clf, opt);
    const auto splits = cv_splits(samples.size(), opt);
    for (std::size_t k = 0; k < opt.thresholds.size(); ++k) {
      ConfusionCounts want;
      for (const auto& split : splits) want += oracle::confusion(subs, probs, split, opt.thresholds[k]);
      CHECK(metrics[k].counts == want);
      CHECK(metrics[k].f1.value == f1(want).value);
    }
  }

  TEST_CASE("nearly whole-dataset split") {
    const auto samples = labeled_samples(dataset());
    const LexiconClassifier clf(bundled());
    CvOptions whole;
    whole.k_splits = 1;
    whole.split_frac = 0.99;
    const ConfusionCounts cv = cross_validate(samples, clf, whole)[0].counts;
    ConfusionCounts all;
    for (const auto& s : samples) {
      for (const auto& c : per_label_counts(predict(clf.score(s.text), kDefaultThreshold), s.truth)) all += c;
    }
    CHECK(all.total() - cv.total() == kLabelCount);
    CHECK(all.tp >= cv.tp);
    CHECK(all.fp >= cv.fp);
    CHECK(all.tn >= cv.tn);
    CHECK(all.fn >= cv.fn);
  }

  TEST_CASE("perfect lexicon gives perfect scores") {
    const Lexicon lex({{"gym", {{label_id(Topic::exercise), 0.9}, {label_id(Emotion::proud), 0.9}}},
                       {"dinner", {{label_id(Topic::family), 0.9}}}});
    const std::vector<Entry> entries{
        {"a", {{"gym", std::vector{Topic::exercise}, std::vector{Emotion::proud}},
               {"dinner", std::vector{Topic::family}, std::nullopt}}}};
    CvOptions opt;
    opt.k_splits = 2;
    opt.split_frac = 0.5;
    opt.thresholds = {0.1, 0.5, 0.8};
    for (const auto& m : cross_validate(labeled_samples(entries), LexiconClassifier(lex), opt)) {
      CHECK(m.f1.value == 1.0);
      CHECK(m.normalized_accuracy.value == 1.0);
    }
  }

  TEST_CASE("empty datasets") {
    const std::vector<Entry> unlabeled{{"a", {{"text", std::nullopt, std::nullopt}}}};
    CHECK(testing::error_code([&] { labeled_samples(unlabeled); }) == Errc::empty_dataset);
  }

  TEST_CASE("metrics output") {
    const std::vector<ThresholdMetrics> ms{{0.2, {1, 2, 3, 4}, {0.5, false}, {0.6, true}}};
    const json j = metrics_json(ms);
    CHECK(j["0.2"]["counts"]["fn"] == 4);
    CHECK(j["0.2"]["flags"] == json::array({"norm_acc_undefined"}));
    const std::string csv = metrics_csv(ms);
    CHECK(csv.rfind("threshold,f1,norm_acc", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  }

  TEST_CASE("consistency of small cases") {
    CHECK(consistency_check(from_order({2, 0, 1, 3, 4, 5, 8, 7, 6})).consistent);
    PreferenceMatrix cycle(3);
    cycle.set(0, 1, 0);
    cycle.set(1, 2, 1);
    cycle.set(0, 2, 2);
    const auto r = consistency_check(cycle);
    CHECK_FALSE(r.consistent);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == std::array<int, 3>{0, 1, 2});
    CHECK(testing::error_code([] { consistency_check(PreferenceMatrix(4)); }) == Errc::incomplete_matrix);
  }

  TEST_CASE("consistency agrees with enumeration and win counts") {
    Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const PreferenceMatrix m = random_matrix(rng, 3 + static_cast<int>(rng.below(7)));
      const auto r = consistency_check(m);
      const auto want = oracle::three_cycles(m);
      CHECK(r.violations.size() == want.size());
      for (const auto& v : r.violations) CHECK(want.count(v) == 1);
      auto wins = m.win_counts();
      std::sort(wins.begin(), wins.end());
      std::vector<int> strict(wins.size());
      std::iota(strict.begin(), strict.end(), 0);
      CHECK(r.consistent == (wins == strict));
    }
  }

  TEST_CASE("preference matrix json") {
    Rng rng(13);
    const PreferenceMatrix m = random_matrix(rng, 5);
    const PreferenceMatrix back = PreferenceMatrix::from_json(m.to_json());
    CHECK(back.to_json() == m.to_json());
    CHECK(testing::error_code([] { PreferenceMatrix::from_json({{"n", 3}, {"choices", {{0, 1, 2}}}}); }) ==
          Errc::invalid_argument);
    CHECK(testing::error_code([] { PreferenceMatrix::from_json({{"n", "3"}}); }) == Errc::parse_error);
  }

  TEST_CASE("preference tally") {
    const Factor factor{"circles over strings", {{0, 1}}};
    auto build = [](int wins, int total) {
      std::vector<PreferenceMatrix> ms;
      for (int i = 0; i < total; ++i) {
        PreferenceMatrix m(2);
        m.set(0, 1, i < wins ? 0 : 1);
        ms.push_back(m);
      }
      return ms;
    };
    const auto t72 = preference_tally(build(72, 100), factor);
    CHECK(t72.wins == 72);
    CHECK(t72.total == 100);
    CHECK(t72.rate == 0.72);
    CHECK(t72.ci_low < 0.72);
    CHECK(t72.ci_high > 0.72);
    CHECK(t72.p_value < 0.001);

    const auto even = preference_tally(build(50, 100), factor);
    CHECK(even.rate == 0.5);
    CHECK(even.p_value == doctest::Approx(1.0));

    CHECK(preference_tally(build(10, 10), factor).rate == 1.0);
    CHECK(testing::error_code([&] { preference_tally(build(1, 1), factor); }) == Errc::invalid_argument);
    const Factor unrelated{"none", {}};
    CHECK(testing::error_code([&] { preference_tally(build(3, 5), unrelated); }) == Errc::no_relevant_pairs);
  }
}
