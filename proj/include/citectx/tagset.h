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

#ifndef CITECTX_TAGSET_H_
#define CITECTX_TAGSET_H_

#include <span>
#include <string_view>

namespace citectx {

// Penn Treebank part-of-speech tags plus the bracket tags used for
// parentheses.
std::span<const std::string_view> PennTags();

bool IsKnownTag(std::string_view tag);

// VB, VBD, VBG, VBN, VBP, VBZ.
bool IsVerbTag(std::string_view tag);

// VBD, VBP, VBZ.
bool IsFiniteVerbTag(std::string_view tag);

}  // namespace citectx

#endif  // CITECTX_TAGSET_H_
