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

#include <httplib.h>

#include <chrono>
#include <thread>

#include "helpers.hpp"
#include "lemotif/remote.hpp"
#include "lemotif/schema.hpp"

using namespace lemotif;
using nlohmann::json;

namespace {

json full_body(double fill) {
  LabelProbs p;
  for (LabelId id = 0; id < kLabelCount; ++id) p[id] = fill;
  return to_json(p);
}

// Minimal stand-in inference server on an ephemeral port.
class Stub {
 public:
  Stub() {
    server_.Post("/ok", [](const httplib::Request& req, httplib::Response& res) {
      const auto text = json::parse(req.body).at("text").get<std::string>();
      json body = full_body(0.0);
      body["topic_probs"]["work"] = text == "office" ? 0.9 : 0.1;
      res.set_content(body.dump(), "application/json");
    });
    server_.Post("/short", [](const httplib::Request&, httplib::Response& res) {
      json body = full_body(0.1);
      body["emotion_probs"].erase("sad");
      res.set_content(body.dump(), "application/json");
    });
    server_.Post("/garbage", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("not json", "text/plain");
    });
    server_.Post("/fail", [](const httplib::Request&, httplib::Response& res) { res.status = 503; });
    server_.Post("/slow", [](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(600));
      res.set_content(full_body(0.0).dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~Stub() {
    server_.stop();
    thread_.join();
  }
  std::string url(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST_SUITE("remote") {
  TEST_CASE("response validation") {
    const LabelProbs p = parse_remote_probs(full_body(0.25));
    for (LabelId id = 0; id < kLabelCount; ++id) CHECK(p[id] == 0.25);

    json missing = full_body(0.1);
    missing["topic_probs"].erase("god");
    CHECK(testing::error_code([&] { parse_remote_probs(missing); }) == Errc::malformed_response);

    json big = full_body(0.1);
    big["emotion_probs"]["sad"] = 1.7;
    try {
      parse_remote_probs(big);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::malformed_response);
      CHECK(e.detail() == "emotion_probs.sad");
    }

    json extra = full_body(0.1);
    extra["topic_probs"]["autoencoder"] = 0.1;
    CHECK(testing::error_code([&] { parse_remote_probs(extra); }) == Errc::malformed_response);
    CHECK(testing::error_code([] { parse_remote_probs(json::array()); }) == Errc::malformed_response);
  }

  TEST_CASE("live stub") {
    Stub stub;
    const std::chrono::milliseconds timeout(300);
    CHECK(RemoteClassifier(stub.url("/ok"), timeout).score("office").at(Topic::work) == 0.9);
    CHECK(RemoteClassifier(stub.url("/ok"), timeout).score("home").at(Topic::work) == 0.1);
    CHECK(testing::error_code([&] { RemoteClassifier(stub.url("/short"), timeout).score("x"); }) ==
          Errc::malformed_response);
    CHECK(testing::error_code([&] { RemoteClassifier(stub.url("/garbage"), timeout).score("x"); }) ==
          Errc::malformed_response);
    try {
      RemoteClassifier(stub.url("/fail"), timeout).score("x");
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::remote_error);
      CHECK(e.status() == 503);
    }
    CHECK(testing::error_code([&] { RemoteClassifier(stub.url("/slow"), timeout).score("x"); }) ==
          Errc::timeout);
  }

  TEST_CASE("unreachable and bad endpoints") {
    CHECK(testing::error_code([] { RemoteClassifier("127.0.0.1/x", std::chrono::milliseconds(100)); }) ==
          Errc::invalid_argument);
    // Port 9 (discard) is essentially never listening in a test sandbox.
    CHECK(testing::error_code([] {
            RemoteClassifier("http://127.0.0.1:9/predict", std::chrono::milliseconds(200)).score("x");
          }) == Errc::remote_error);
  }
}
