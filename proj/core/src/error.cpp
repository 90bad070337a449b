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

#include "lemotif/error.hpp"

#include <utility>

namespace lemotif {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "empty_input";
    case Errc::empty_image: return "empty_image";
    case Errc::empty_mask: return "empty_mask";
    case Errc::open_outline: return "open_outline";
    case Errc::bad_step: return "bad_step";
    case Errc::timeout: return "timeout";
    case Errc::malformed_response: return "malformed_response";
    case Errc::remote_error: return "remote_error";
    case Errc::empty_color_list: return "empty_color_list";
    case Errc::degenerate_outline: return "degenerate_outline";
    case Errc::empty_dataset: return "empty_dataset";
    case Errc::incomplete_matrix: return "incomplete_matrix";
    case Errc::no_relevant_pairs: return "no_relevant_pairs";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::unsupported_style: return "unsupported_style";
    case Errc::shape_missing: return "shape_missing";
    case Errc::address_in_use: return "address_in_use";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message, std::string detail,
             std::optional<int> status)
    : std::runtime_error(message),
      code_(code),
      detail_(std::move(detail)),
      status_(status) {}

}  // namespace lemotif
