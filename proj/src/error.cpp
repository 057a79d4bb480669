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

#include "factual/error.hpp"

namespace factual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownModifier: return "UnknownModifier";
    case ErrorKind::kAmbiguousSlot: return "AmbiguousSlot";
    case ErrorKind::kEmptySlot: return "EmptySlot";
    case ErrorKind::kFormatError: return "FormatError";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kEmptyFile: return "EmptyFile";
    case ErrorKind::kMissingKey: return "MissingKey";
    case ErrorKind::kMissingImage: return "MissingImage";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNegativeInput: return "NegativeInput";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kZeroVariance: return "ZeroVariance";
    case ErrorKind::kDegenerateM: return "DegenerateM";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kGoldMissing: return "GoldMissing";
    case ErrorKind::kAllDistinct: return "AllDistinct";
    case ErrorKind::kNeverCrosses: return "NeverCrosses";
    case ErrorKind::kMissingField: return "MissingField";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message) {}

}  // namespace factual
