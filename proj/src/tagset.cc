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

#include "citectx/tagset.h"

#include <algorithm>
#include <array>

namespace citectx {
namespace {

constexpr std::array<std::string_view, 47> kTags = {
    "CC",  "CD",   "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR",
    "JJS", "LS",   "MD",   "NN",  "NNS", "NNP", "NNPS", "PDT",
    "POS", "PRP",  "PRP$", "RB",  "RBR", "RBS", "RP",  "SYM",
    "TO",  "UH",   "VB",   "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP",   "WP$",  "WRB", "-LRB-", "-RRB-", ",", ".",
    ":",   "``",   "''",   "#",   "$",   "HYPH", "NFP"};

}  // namespace

std::span<const std::string_view> PennTags() { return kTags; }

bool IsKnownTag(std::string_view tag) {
  return std::find(kTags.begin(), kTags.end(), tag) != kTags.end();
}

bool IsVerbTag(std::string_view tag) {
  return tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" ||
         tag == "VBP" || tag == "VBZ";
}

bool IsFiniteVerbTag(std::string_view tag) {
  return tag == "VBD" || tag == "VBP" || tag == "VBZ";
}

}  // namespace citectx
