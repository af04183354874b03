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

#include "citectx/tokenizer.h"

#include <cstdint>

namespace citectx {
namespace {

enum class CharClass { kWord, kJoiner, kOther };

// Decodes the code point at `pos`; returns its byte length (1 for invalid
// sequences so scanning always advances).
std::size_t DecodeAt(std::string_view s, std::size_t pos, char32_t *cp) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    *cp = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t value = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
  } else {
    *cp = 0xFFFD;
    return 1;
  }
  if (pos + len > s.size()) {
    *cp = 0xFFFD;
    return 1;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      *cp = 0xFFFD;
      return 1;
    }
    value = (value << 6) | (b & 0x3F);
  }
  *cp = value;
  return len;
}

CharClass Classify(char32_t cp) {
  if (cp < 0x80) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
        (cp >= '0' && cp <= '9')) {
      return CharClass::kWord;
    }
    if (cp == '\'' || cp == '-') return CharClass::kJoiner;
    return CharClass::kOther;
  }
  // Right single quote doubles as an apostrophe; U+2010/U+2011 are hyphens.
  if (cp == 0x2019 || cp == 0x2010 || cp == 0x2011) return CharClass::kJoiner;
  if (cp == 0xFFFD || cp == 0x00A0 || (cp >= 0x00A1 && cp <= 0x00BF) ||
      cp == 0x00D7 || cp == 0x00F7 || (cp >= 0x2000 && cp <= 0x206F) ||
      (cp >= 0x3000 && cp <= 0x303F)) {
    return CharClass::kOther;
  }
  return CharClass::kWord;
}

}  // namespace

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<Token> TokenizeWithOffsets(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  bool in_token = false;
  std::size_t start = 0;
  std::size_t last_word_end = 0;  // end of the last word char in the token

  auto flush = [&]() {
    if (in_token) {
      tokens.push_back(
          {AsciiLower(text.substr(start, last_word_end - start)), start,
           last_word_end});
    }
    in_token = false;
  };

  while (pos < text.size()) {
    char32_t cp;
    const std::size_t len = DecodeAt(text, pos, &cp);
    const CharClass cls = Classify(cp);
    if (cls == CharClass::kWord) {
      if (!in_token) {
        in_token = true;
        start = pos;
      }
      last_word_end = pos + len;
    } else if (cls == CharClass::kJoiner && in_token &&
               last_word_end == pos) {
      // A joiner only survives if a word char follows immediately.
      char32_t next = 0;
      if (pos + len < text.size()) DecodeAt(text, pos + len, &next);
      if (pos + len >= text.size() || Classify(next) != CharClass::kWord) {
        flush();
      }
    } else {
      flush();
    }
    pos += len;
  }
  flush();
  return tokens;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto &t : TokenizeWithOffsets(text)) out.push_back(std::move(t.text));
  return out;
}

}  // namespace citectx
