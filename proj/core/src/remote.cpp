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

#include "lemotif/remote.hpp"

#include <httplib.h>

#include <array>
#include <cmath>

#include <nlohmann/json.hpp>

#include "lemotif/error.hpp"

namespace lemotif {
namespace {

template <std::size_t N, typename Enum>
void read_block(const nlohmann::json& body, const char* key, const std::array<Enum, N>& all,
                std::array<double, N>& out) {
  if (!body.contains(key) || !body[key].is_object())
    throw Error(Errc::malformed_response, std::string("remote response lacks '") + key + "'", key);
  const auto& block = body[key];
  for (const auto& [k, _] : block.items()) {
    bool known = false;
    for (Enum v : all) known = known || name(v) == k;
    if (!known)
      throw Error(Errc::malformed_response, "remote response has unknown label '" + k + "'",
                  std::string(key) + "." + k);
  }
  for (std::size_t i = 0; i < N; ++i) {
    const std::string label(name(all[i]));
    const std::string field = std::string(key) + "." + label;
    if (!block.contains(label))
      throw Error(Errc::malformed_response, "remote response is missing '" + label + "'", field);
    const auto& v = block[label];
    if (!v.is_number())
      throw Error(Errc::malformed_response, "remote probability for '" + label + "' is not a number",
                  field);
    const double p = v.get<double>();
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw Error(Errc::malformed_response,
                  "remote probability for '" + label + "' is outside [0, 1]", field);
    out[i] = p;
  }
}

}  // namespace

LabelProbs parse_remote_probs(const nlohmann::json& body) {
  if (!body.is_object()) throw Error(Errc::malformed_response, "remote response is not an object");
  LabelProbs probs;
  read_block(body, "topic_probs", kAllTopics, probs.topic);
  read_block(body, "emotion_probs", kAllEmotions, probs.emotion);
  return probs;
}

RemoteClassifier::RemoteClassifier(std::string endpoint, std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {
  const auto scheme = endpoint_.find("://");
  if (scheme == std::string::npos)
    throw Error(Errc::invalid_argument, "remote endpoint must be an absolute URL", "endpoint");
  const auto path_start = endpoint_.find('/', scheme + 3);
  origin_ = endpoint_.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : endpoint_.substr(path_start);
}

LabelProbs RemoteClassifier::score(std::string_view text) const {
  httplib::Client client(origin_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const std::string body = nlohmann::json{{"text", std::string(text)}}.dump();
  const auto started = std::chrono::steady_clock::now();
  auto res = client.Post(path_, body, "application/json");
  if (!res) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const auto err = res.error();
    if (err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read && elapsed >= timeout_ * 9 / 10))
      throw Error(Errc::timeout, "remote classifier timed out after " +
                                     std::to_string(timeout_.count()) + " ms");
    throw Error(Errc::remote_error, "remote classifier unreachable: " + httplib::to_string(err));
  }
  if (res->status < 200 || res->status >= 300)
    throw Error(Errc::remote_error,
                "remote classifier returned HTTP " + std::to_string(res->status), {}, res->status);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(Errc::malformed_response, "remote response is not valid JSON");
  }
  return parse_remote_probs(doc);
}

}  // namespace lemotif
