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

#include "lemotif/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "lemotif/error.hpp"

namespace lemotif {

std::string_view label_name(LabelId id) noexcept {
  if (id < kTopicCount) return name(kAllTopics[id]);
  if (id < kLabelCount) return name(kAllEmotions[id - kTopicCount]);
  return "";
}

std::optional<LabelId> parse_label(std::string_view s) noexcept {
  if (auto t = parse_topic(s)) return label_id(*t);
  if (auto e = parse_emotion(s)) return label_id(*e);
  return std::nullopt;
}

bool LabelProbs::valid() const noexcept {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  return std::all_of(topic.begin(), topic.end(), ok) &&
         std::all_of(emotion.begin(), emotion.end(), ok);
}

LabelSet select_labels(const LabelProbs& probs, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw Error(Errc::invalid_argument, "threshold must lie in (0, 1)", "threshold");
  LabelSet out;
  for (std::size_t i = 0; i < kTopicCount; ++i) {
    if (!(probs.topic[i] > threshold)) continue;
    if (!out.topic || probs.topic[i] > probs.topic[index(*out.topic)]) out.topic = kAllTopics[i];
  }
  std::vector<std::size_t> passing;
  for (std::size_t i = 0; i < kEmotionCount; ++i)
    if (probs.emotion[i] > threshold) passing.push_back(i);
  std::stable_sort(passing.begin(), passing.end(), [&](std::size_t a, std::size_t b) {
    return probs.emotion[a] > probs.emotion[b];
  });
  if (passing.size() > kMaxEmotions) passing.resize(kMaxEmotions);
  for (std::size_t i : passing) out.emotions.push_back(kAllEmotions[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Lexicon

namespace {

bool is_token_char(unsigned char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

void check_keyword(const std::string& kw) {
  const auto tokens = tokenize(kw);
  std::string normalized;
  for (const auto& t : tokens) normalized += (normalized.empty() ? "" : " ") + t;
  if (tokens.empty() || tokens.size() > 2 || normalized != kw)
    throw Error(Errc::invalid_argument,
                "lexicon keyword '" + kw + "' must be one or two lowercase words separated by a single space",
                "keyword");
}

}  // namespace

Lexicon::Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    check_keyword(e.keyword);
    if (e.labels.empty())
      throw Error(Errc::invalid_argument, "lexicon keyword '" + e.keyword + "' has no labels");
    for (const auto& [label, weight] : e.labels) {
      if (label >= kLabelCount)
        throw Error(Errc::invalid_argument, "lexicon keyword '" + e.keyword + "' has a bad label");
      if (!(weight > 0.0 && weight <= 1.0))
        throw Error(Errc::invalid_argument,
                    "lexicon weight for '" + e.keyword + "' must lie in (0, 1]");
    }
    if (!by_keyword_.emplace(e.keyword, i).second)
      throw Error(Errc::invalid_argument, "duplicate lexicon keyword '" + e.keyword + "'");
  }
}

Lexicon Lexicon::from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("version").get<int>() != 1)
      throw Error(Errc::parse_error, "lexicon: unsupported version", "version");
    std::vector<LexiconEntry> entries;
    for (const auto& item : doc.at("entries")) {
      LexiconEntry e;
      e.keyword = item.at("keyword").get<std::string>();
      for (const auto& pair : item.at("labels")) {
        if (!pair.is_array() || pair.size() != 2)
          throw Error(Errc::parse_error, "lexicon: labels must be [name, weight] pairs",
                      e.keyword);
        const auto label_text = pair[0].get<std::string>();
        const auto label = parse_label(label_text);
        if (!label)
          throw Error(Errc::parse_error, "lexicon: unknown label '" + label_text + "'", e.keyword);
        e.labels.emplace_back(*label, pair[1].get<double>());
      }
      entries.push_back(std::move(e));
    }
    return Lexicon(std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::parse_error, std::string("lexicon: ") + ex.what());
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open lexicon " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, "lexicon " + path.string() + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json Lexicon::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& [label, weight] : e.labels) labels.push_back({label_name(label), weight});
    entries.push_back({{"keyword", e.keyword}, {"labels", labels}});
  }
  return {{"version", 1}, {"entries", entries}};
}

std::optional<std::size_t> Lexicon::find(std::string_view keyword) const {
  const auto it = by_keyword_.find(std::string(keyword));
  if (it == by_keyword_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_token_char(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

LabelProbs score_lexicon(std::string_view text, const Lexicon& lexicon) {
  const auto tokens = tokenize(text);
  std::vector<std::size_t> hits(lexicon.entries().size(), 0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (auto k = lexicon.find(tokens[i])) ++hits[*k];
    if (i + 1 < tokens.size())
      if (auto k = lexicon.find(tokens[i] + " " + tokens[i + 1])) ++hits[*k];
  }
  // Multiply in lexicon order so the result does not depend on token order.
  std::array<double, kLabelCount> keep;
  keep.fill(1.0);
  for (std::size_t k = 0; k < hits.size(); ++k) {
    for (std::size_t n = 0; n < hits[k]; ++n)
      for (const auto& [label, weight] : lexicon.entries()[k].labels) keep[label] *= 1.0 - weight;
  }
  LabelProbs probs;
  for (LabelId id = 0; id < kLabelCount; ++id) probs[id] = 1.0 - keep[id];
  return probs;
}

// ---------------------------------------------------------------------------

std::vector<Classification> analyze_entry(const Entry& entry, const Classifier& backend,
                                          double threshold) {
  std::vector<Classification> out;
  out.reserve(entry.sub_entries.size());
  for (std::size_t i = 0; i < entry.sub_entries.size(); ++i) {
    try {
      Classification c;
      c.probs = backend.score(entry.sub_entries[i].text);
      c.labels = select_labels(c.probs, threshold);
      out.push_back(std::move(c));
    } catch (const Error& e) {
      throw Error(e.code(), "sub-entry " + std::to_string(i + 1) + ": " + e.what(),
                  "sub_entries[" + std::to_string(i) + "]", e.status());
    }
  }
  return out;
}

std::vector<LabelSet> classify_entry(const Entry& entry, const Classifier& backend,
                                     double threshold) {
  std::vector<LabelSet> out;
  for (auto& c : analyze_entry(entry, backend, threshold)) out.push_back(std::move(c.labels));
  return out;
}

}  // namespace lemotif
