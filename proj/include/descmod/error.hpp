// Copyright 2026 The descmod authors
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

#ifndef DESCMOD_ERROR_HPP_
#define DESCMOD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace descmod {

/// Failure categories surfaced through both the C++ and the C interfaces.
enum class ErrorCode {
  zero_vector,
  degenerate_angle,
  invalid_distance,
  shape_mismatch,
  insufficient_data,
  uninitialized_stats,
  domain_error,
  out_of_range,
  format_error,
  config_error,
  degenerate_labels,
  io_error,
  numeric_check,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace descmod

#endif  // DESCMOD_ERROR_HPP_
