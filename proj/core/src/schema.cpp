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

#include "lemotif/schema.hpp"

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

std::string join_path(const std::string& base, const std::string& leaf) {
  return base.empty() ? leaf : base + "." + leaf;
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw Error(Errc::parse_error, field + ": " + message, field);
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == key;
    if (!ok) fail(join_path(path, key), "unknown field");
  }
}

template <typename T, typename Parse>
std::vector<T> parse_names(const nlohmann::json& arr, const std::string& path, Parse parse,
                           const char* kind) {
  if (!arr.is_array()) fail(path, "expected an array of strings");
  std::vector<T> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) fail(field, "expected a string");
    const auto value = parse(arr[i].get<std::string>());
    if (!value) fail(field, std::string("unknown ") + kind + " '" + arr[i].get<std::string>() + "'");
    out.push_back(*value);
  }
  return out;
}

}  // namespace

std::string_view trim(std::string_view s) noexcept {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Entry entry_from_json(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path.empty() ? "entry" : path, "expected an object");
  reject_unknown(doc, {"id", "sub_entries"}, path);
  Entry entry;
  const std::string id_path = join_path(path, "id");
  if (!doc.contains("id") || !doc["id"].is_string()) fail(id_path, "expected a string");
  entry.id = doc["id"].get<std::string>();

  const std::string subs_path = join_path(path, "sub_entries");
  if (!doc.contains("sub_entries") || !doc["sub_entries"].is_array())
    fail(subs_path, "expected an array");
  const auto& subs = doc["sub_entries"];
  if (subs.empty() || subs.size() > kMaxSubEntries) fail(subs_path, "must hold 1 to 3 sub-entries");

  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string sp = subs_path + "[" + std::to_string(i) + "]";
    const auto& s = subs[i];
    if (!s.is_object()) fail(sp, "expected an object");
    reject_unknown(s, {"text", "topics", "emotions"}, sp);
    SubEntry sub;
    if (!s.contains("text") || !s["text"].is_string()) fail(sp + ".text", "expected a string");
    sub.text = s["text"].get<std::string>();
    if (s.contains("topics"))
      sub.topics = parse_names<Topic>(s["topics"], sp + ".topics", parse_topic, "topic");
    if (s.contains("emotions"))
      sub.emotions = parse_names<Emotion>(s["emotions"], sp + ".emotions", parse_emotion, "emotion");
    if (sub.has_labels() && trim(sub.text).empty())
      fail(sp + ".text", "labelled sub-entries need non-blank text");
    entry.sub_entries.push_back(std::move(sub));
  }
  return entry;
}

nlohmann::json to_json(const Entry& entry) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& s : entry.sub_entries) {
    nlohmann::json j = {{"text", s.text}};
    if (s.topics) {
      j["topics"] = nlohmann::json::array();
      for (Topic t : *s.topics) j["topics"].push_back(name(t));
    }
    if (s.emotions) {
      j["emotions"] = nlohmann::json::array();
      for (Emotion e : *s.emotions) j["emotions"].push_back(name(e));
    }
    subs.push_back(std::move(j));
  }
  return {{"id", entry.id}, {"sub_entries", subs}};
}

Entry entry_from_text(std::string_view text, std::string id) {
  if (trim(text).empty()) throw Error(Errc::empty_input, "input text is empty", "text");
  Entry e;
  e.id = std::move(id);
  e.sub_entries.push_back(SubEntry{std::string(text), std::nullopt, std::nullopt});
  return e;
}

std::vector<Entry> dataset_from_json(const nlohmann::json& doc) {
  const nlohmann::json* arr = &doc;
  std::string base;
  if (doc.is_object()) {
    reject_unknown(doc, {"entries"}, "");
    if (!doc.contains("entries")) fail("entries", "missing");
    arr = &doc["entries"];
    base = "entries";
  }
  if (!arr->is_array()) fail(base.empty() ? "dataset" : base, "expected an array of entries");
  std::vector<Entry> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(entry_from_json((*arr)[i], base + "[" + std::to_string(i) + "]"));
  return out;
}

nlohmann::json to_json(const LabelSet& labels) {
  nlohmann::json j;
  j["topic"] = labels.topic ? nlohmann::json(name(*labels.topic)) : nlohmann::json(nullptr);
  j["emotions"] = nlohmann::json::array();
  for (Emotion e : labels.emotions) j["emotions"].push_back(name(e));
  return j;
}

LabelSet label_set_from_json(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path.empty() ? "label_set" : path, "expected an object");
  reject_unknown(doc, {"topic", "emotions"}, path);
  LabelSet out;
  if (doc.contains("topic") && !doc["topic"].is_null()) {
    const std::string tp = join_path(path, "topic");
    if (!doc["topic"].is_string()) fail(tp, "expected a string or null");
    out.topic = parse_topic(doc["topic"].get<std::string>());
    if (!out.topic) fail(tp, "unknown topic '" + doc["topic"].get<std::string>() + "'");
  }
  if (doc.contains("emotions"))
    out.emotions =
        parse_names<Emotion>(doc["emotions"], join_path(path, "emotions"), parse_emotion, "emotion");
  if (out.emotions.size() > kMaxEmotions)
    fail(join_path(path, "emotions"), "at most 4 emotions per label set");
  return out;
}

nlohmann::json to_json(const LabelProbs& probs) {
  nlohmann::json topics = nlohmann::json::object();
  for (Topic t : kAllTopics) topics[std::string(name(t))] = probs.at(t);
  nlohmann::json emotions = nlohmann::json::object();
  for (Emotion e : kAllEmotions) emotions[std::string(name(e))] = probs.at(e);
  return {{"topic_probs", topics}, {"emotion_probs", emotions}};
}

}  // namespace lemotif
