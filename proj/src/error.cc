// Copyright 2026 The citectx Authors.
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

#include "citectx/error.h"

namespace citectx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kCyclicSectionTree: return "CyclicSectionTree";
    case ErrorCode::kEmptyAfterNormalization: return "EmptyAfterNormalization";
    case ErrorCode::kAmbiguousRegistry: return "AmbiguousRegistry";
    case ErrorCode::kUnknownVersion: return "UnknownVersion";
    case ErrorCode::kMixedDocuments: return "MixedDocuments";
    case ErrorCode::kMixedVersions: return "MixedVersions";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kDegenerateRanks: return "DegenerateRanks";
    case ErrorCode::kModelLoadFailure: return "ModelLoadFailure";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace citectx
