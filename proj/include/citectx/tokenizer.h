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

#ifndef CITECTX_TOKENIZER_H_
#define CITECTX_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace citectx {

struct Token {
  std::string text;   // lowercased
  std::size_t begin;  // byte offset into the source text
  std::size_t end;
};

// Word tokens: maximal runs of letters and digits, joined across single
// internal apostrophes and hyphens. Everything else is dropped. ASCII is
// lowercased; other code points are kept as-is and count as letters unless
// they are typographic punctuation (dashes, quotes, ellipsis, spaces).
std::vector<Token> TokenizeWithOffsets(std::string_view text);

std::vector<std::string> Tokenize(std::string_view text);

// Lowercases ASCII letters only.
std::string AsciiLower(std::string_view text);

}  // namespace citectx

#endif  // CITECTX_TOKENIZER_H_
