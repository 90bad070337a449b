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

#include <chrono>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "lemotif/classify.hpp"

namespace lemotif {

/// Validates `{"topic_probs": {...11 keys}, "emotion_probs": {...18 keys}}`.
/// Missing, unknown, non-numeric, or out-of-range entries raise
/// Errc::malformed_response.
LabelProbs parse_remote_probs(const nlohmann::json& body);

/// Client for an external model that honours the LabelProbs contract. Each
/// call POSTs `{"text": ...}` to the endpoint; calls are independent.
class RemoteClassifier final : public Classifier {
 public:
  /// `endpoint` is a full URL such as http://127.0.0.1:9000/predict.
  RemoteClassifier(std::string endpoint, std::chrono::milliseconds timeout);

  /// Errc::timeout, Errc::remote_error (with HTTP status when one was
  /// received), or Errc::malformed_response.
  LabelProbs score(std::string_view text) const override;
  std::string_view backend() const noexcept override { return "remote"; }

  const std::string& endpoint() const noexcept { return endpoint_; }

 private:
  std::string endpoint_;
  std::string origin_;
  std::string path_;
  std::chrono::milliseconds timeout_;
};

}  // namespace lemotif
