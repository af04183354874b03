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

#ifndef CITECTX_ERROR_H_
#define CITECTX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace citectx {

// Failure kinds raised by the library. Data-level problems that are part of
// normal output (validation violations, skipped anchors, degenerate
// correlations in a batch) are reported as values, not thrown.
enum class ErrorCode {
  kMalformedRecord,
  kMissingField,
  kCyclicSectionTree,
  kEmptyAfterNormalization,
  kAmbiguousRegistry,
  kUnknownVersion,
  kMixedDocuments,
  kMixedVersions,
  kEmptySentence,
  kDegenerateRanks,
  kModelLoadFailure,
  kInvalidConfig,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace citectx

#endif  // CITECTX_ERROR_H_
