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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lemotif/domain.hpp"

namespace lemotif {

inline constexpr double kDefaultThreshold = 0.2;

/// Flat label id: topics occupy [0, 11), emotions [11, 29).
using LabelId = std::uint8_t;

constexpr LabelId label_id(Topic t) noexcept { return static_cast<LabelId>(index(t)); }
constexpr LabelId label_id(Emotion e) noexcept {
  return static_cast<LabelId>(kTopicCount + index(e));
}
std::string_view label_name(LabelId id) noexcept;
std::optional<LabelId> parse_label(std::string_view name) noexcept;

/// Independent per-label probabilities (multi-label: no sum constraint).
struct LabelProbs {
  std::array<double, kTopicCount> topic{};
  std::array<double, kEmotionCount> emotion{};

  double operator[](LabelId id) const noexcept {
    return id < kTopicCount ? topic[id] : emotion[id - kTopicCount];
  }
  double& operator[](LabelId id) noexcept {
    return id < kTopicCount ? topic[id] : emotion[id - kTopicCount];
  }
  double at(Topic t) const noexcept { return topic[index(t)]; }
  double at(Emotion e) const noexcept { return emotion[index(e)]; }

  /// All values finite and in [0, 1].
  bool valid() const noexcept;
};

/// Thresholded selection: the single most probable topic and up to four
/// emotions, strictly above threshold, in descending probability.
struct LabelSet {
  std::optional<Topic> topic;
  std::vector<Emotion> emotions;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

inline constexpr std::size_t kMaxEmotions = 4;

/// Ties go to the earlier enumerator. Throws Errc::invalid_argument unless
/// 0 < threshold < 1.
LabelSet select_labels(const LabelProbs& probs, double threshold = kDefaultThreshold);

/// Keyword (or two-word phrase) to weighted labels.
struct LexiconEntry {
  std::string keyword;
  std::vector<std::pair<LabelId, double>> labels;
};

class Lexicon {
 public:
  Lexicon() = default;
  /// Throws Errc::parse_error / Errc::invalid_argument on schema violations.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  static Lexicon from_json(const nlohmann::json& doc);
  static Lexicon load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  /// Index into entries() or nullopt.
  std::optional<std::size_t> find(std::string_view keyword) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_keyword_;
};

/// Lowercases ASCII and splits on anything that is not an ASCII letter or digit
/// (bytes >= 0x80 are kept so UTF-8 words stay whole).
std::vector<std::string> tokenize(std::string_view text);

/// Noisy-or over matched keyword occurrences: p = 1 - prod(1 - w).
LabelProbs score_lexicon(std::string_view text, const Lexicon& lexicon);

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual LabelProbs score(std::string_view text) const = 0;
  virtual std::string_view backend() const noexcept = 0;
};

class LexiconClassifier final : public Classifier {
 public:
  explicit LexiconClassifier(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}
  LabelProbs score(std::string_view text) const override { return score_lexicon(text, lexicon_); }
  std::string_view backend() const noexcept override { return "lexicon"; }
  const Lexicon& lexicon() const noexcept { return lexicon_; }

 private:
  Lexicon lexicon_;
};

struct Classification {
  LabelProbs probs;
  LabelSet labels;
};

/// One result per sub-entry, in order. Backend errors are rethrown with the
/// 1-based sub-entry number in the message and "sub_entries[i]" as detail.
std::vector<Classification> analyze_entry(const Entry& entry, const Classifier& backend,
                                          double threshold = kDefaultThreshold);
std::vector<LabelSet> classify_entry(const Entry& entry, const Classifier& backend,
                                     double threshold = kDefaultThreshold);

}  // namespace lemotif
