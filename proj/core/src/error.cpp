// Copyright 2026 The bondperc Authors
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

#include "bondperc/error.hpp"

#include <cmath>

namespace bondperc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::RetryLimit: return "RetryLimit";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_precondition_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RetryLimit:
    case ErrorCode::IoError:
      return false;
    default:
      return true;
  }
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadProbability,
                "probability must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace bondperc
