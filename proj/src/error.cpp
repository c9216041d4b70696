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

#include "descmod/error.hpp"

namespace descmod {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::zero_vector:
      return "ZeroVector";
    case ErrorCode::degenerate_angle:
      return "DegenerateAngle";
    case ErrorCode::invalid_distance:
      return "InvalidDistance";
    case ErrorCode::shape_mismatch:
      return "ShapeMismatch";
    case ErrorCode::insufficient_data:
      return "InsufficientData";
    case ErrorCode::uninitialized_stats:
      return "UninitializedStats";
    case ErrorCode::domain_error:
      return "DomainError";
    case ErrorCode::out_of_range:
      return "OutOfRange";
    case ErrorCode::format_error:
      return "FormatError";
    case ErrorCode::config_error:
      return "ConfigError";
    case ErrorCode::degenerate_labels:
      return "DegenerateLabels";
    case ErrorCode::io_error:
      return "IoError";
    case ErrorCode::numeric_check:
      return "NumericCheck";
  }
  return "Unknown";
}

}  // namespace descmod
