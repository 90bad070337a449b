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

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lemotif/classify.hpp"
#include "lemotif/domain.hpp"

namespace lemotif {

/// Strict parse of `{ "id": str, "sub_entries": [ { "text": str,
/// "topics": [str]?, "emotions": [str]? } ] }`. Unknown fields, unknown label
/// names, and 0 or more than 3 sub-entries are rejected with Errc::parse_error;
/// Error::detail() names the offending field (prefixed by `path`).
Entry entry_from_json(const nlohmann::json& doc, const std::string& path = "");
nlohmann::json to_json(const Entry& entry);

/// Wraps raw text as a single-sub-entry entry. Throws Errc::empty_input when
/// the text is blank.
Entry entry_from_text(std::string_view text, std::string id = "text");

/// A JSON array of entries, or an object `{ "entries": [...] }`.
std::vector<Entry> dataset_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const LabelSet& labels);
LabelSet label_set_from_json(const nlohmann::json& doc, const std::string& path = "");
nlohmann::json to_json(const LabelProbs& probs);

std::string_view trim(std::string_view s) noexcept;

}  // namespace lemotif
