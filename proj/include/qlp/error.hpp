// Copyright 2026 The qlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLP_ERROR_HPP
#define QLP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlp {

enum class ErrorKind {
  NonHermitian,
  NotPositive,
  NotNormalized,
  NotFaithful,
  ConvergenceFailure,
  SingularPower,
  DimensionMismatch,
  InvalidArgument,
  ZeroInput,
  OutsideStrip,
  LogOfZero,
  InvalidExponent,
  IncompatibleState,
  FaithfulnessLost,
  ConfigError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above; the
// message is meant for humans, the kind for callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace qlp

#endif  // QLP_ERROR_HPP
