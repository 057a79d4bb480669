// Copyright 2026 The Factual Authors.
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

namespace factual {

enum class ErrorKind {
  kSyntaxError,
  kUnknownModifier,
  kAmbiguousSlot,
  kEmptySlot,
  kFormatError,
  kZeroVector,
  kEmptyFile,
  kMissingKey,
  kMissingImage,
  kDimensionMismatch,
  kNegativeInput,
  kLengthMismatch,
  kZeroVariance,
  kDegenerateM,
  kEmptyInput,
  kGoldMissing,
  kAllDistinct,
  kNeverCrosses,
  kMissingField,
  kDuplicateId,
  kInvalidArgument,
  kIoError,
};

// Stable name used in diagnostics, reject files and reports.
std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries exactly one kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // Message without the "Kind: " prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace factual
