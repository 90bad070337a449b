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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lemotif {

enum class Errc {
  empty_input,
  empty_image,
  empty_mask,
  open_outline,
  bad_step,
  timeout,
  malformed_response,
  remote_error,
  empty_color_list,
  degenerate_outline,
  empty_dataset,
  incomplete_matrix,
  no_relevant_pairs,
  invalid_argument,
  parse_error,
  io_error,
  unsupported_style,
  shape_missing,
  address_in_use,
};

std::string_view to_string(Errc code) noexcept;

/// Library-wide exception. `detail` carries a field path or pipeline stage
/// when one is known; `status` is set for HTTP failures of the remote backend.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {},
        std::optional<int> status = std::nullopt);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<int> status() const noexcept { return status_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<int> status_;
};

}  // namespace lemotif
