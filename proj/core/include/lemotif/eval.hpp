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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lemotif/classify.hpp"
#include "lemotif/domain.hpp"

namespace lemotif {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const noexcept { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) noexcept;
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// A metric value plus whether it hit a zero denominator (value is then 0).
struct Metric {
  double value = 0.0;
  bool undefined = false;
};

Metric f1(const ConfusionCounts& c) noexcept;
Metric normalized_accuracy(const ConfusionCounts& c) noexcept;

using LabelMask = std::array<bool, kLabelCount>;

/// One labelled sub-entry: its text and the ground-truth label set.
struct LabeledSample {
  std::string text;
  LabelMask truth{};
};

/// Every sub-entry carrying ground truth; a missing topics or emotions field
/// counts as the empty set. Throws Errc::empty_dataset when none qualify.
std::vector<LabeledSample> labeled_samples(std::span<const Entry> entries);

/// A label is predicted positive when its probability exceeds `threshold`.
LabelMask predict(const LabelProbs& probs, double threshold) noexcept;

/// Per-label counts for one prediction against one truth.
std::array<ConfusionCounts, kLabelCount> per_label_counts(const LabelMask& predicted,
                                                          const LabelMask& truth) noexcept;

enum class Averaging { micro, macro };

struct ThresholdMetrics {
  double threshold = 0.0;
  ConfusionCounts counts;  // pooled over every label and held-out sample
  Metric f1;
  Metric normalized_accuracy;
};

/// Metrics from per-label counts. Micro pools them; macro averages the labels
/// whose metric is defined and flags the result when any label was skipped.
ThresholdMetrics summarize(double threshold, const std::array<ConfusionCounts, kLabelCount>& labels,
                           Averaging averaging);

struct CvOptions {
  int k_splits = 5;
  double split_frac = 0.2;  // held-out fraction per split
  std::vector<double> thresholds{kDefaultThreshold};
  std::uint64_t seed = 0;
  Averaging averaging = Averaging::micro;
};

/// Split s shuffles the sample indices with derive_seed(seed, s) and holds out
/// the first round(split_frac * n) of them (at least one). The backend is
/// never fitted; held-out counts are pooled across splits per threshold.
std::vector<ThresholdMetrics> cross_validate(std::span<const LabeledSample> samples,
                                             const Classifier& backend, const CvOptions& options);

/// Held-out indices for each split, exposed for testing.
std::vector<std::vector<std::size_t>> cv_splits(std::size_t n, const CvOptions& options);

/// {"<threshold>": {"f1", "norm_acc", "flags", "counts"}}
nlohmann::json metrics_json(std::span<const ThresholdMetrics> metrics);
std::string metrics_csv(std::span<const ThresholdMetrics> metrics);

// ---------------------------------------------------------------------------
// Pairwise preferences

class PreferenceMatrix {
 public:
  explicit PreferenceMatrix(int n);

  int size() const noexcept { return n_; }
  void set(int a, int b, int winner);
  std::optional<int> winner(int a, int b) const;
  /// True when a beat b. Throws Errc::incomplete_matrix if the pair is unset.
  bool prefers(int a, int b) const;
  bool complete() const noexcept;
  std::vector<int> win_counts() const;

  /// {"n": 9, "choices": [[a, b, winner], ...]}
  static PreferenceMatrix from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

 private:
  std::size_t slot(int a, int b) const;
  int n_;
  std::vector<int> winners_;  // -1 when unset
};

struct ConsistencyResult {
  bool consistent = true;
  /// Directed 3-cycles (a beats b, b beats c, c beats a), a the smallest index.
  std::vector<std::array<int, 3>> violations;
};

ConsistencyResult consistency_check(const PreferenceMatrix& m);

struct FactorPair {
  int with = 0;
  int without = 0;
};

struct Factor {
  std::string name;
  std::vector<FactorPair> pairs;
};

struct TallyResult {
  std::string name;
  std::size_t wins = 0;
  std::size_t total = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double t_statistic = 0.0;
  double p_value = 1.0;
};

/// Each relevant pair in each matrix is one 0/1 observation of "with" winning.
/// Two-sided one-sample t-test against 0.5; normal-approximation 95% CI.
TallyResult preference_tally(std::span<const PreferenceMatrix> matrices, const Factor& factor);

}  // namespace lemotif
