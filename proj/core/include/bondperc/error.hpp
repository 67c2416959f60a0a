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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bondperc {

enum class ErrorCode {
  NotRegular,
  NotConnected,
  NotSimple,
  BadIndex,
  BadParameter,
  BadProbability,
  Infeasible,
  RetryLimit,
  TooManyEdges,
  ParseError,
  UsageError,
  IoError,
};

/// Machine-readable name of an error code, e.g. "TooManyEdges".
std::string_view error_name(ErrorCode code) noexcept;

/// True for errors that reject the caller's input rather than a failure
/// while computing. The CLI maps these to exit status 2.
bool is_precondition_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Throws BadProbability unless 0 <= p <= 1 (NaN rejected).
void require_probability(double p);

}  // namespace bondperc
