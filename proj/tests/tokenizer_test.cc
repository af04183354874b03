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

#include <random>

#include "citectx/tagset.h"
#include "gtest/gtest.h"

namespace citectx {
namespace {

using Tokens = std::vector<std::string>;

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(Tokenize("Participants met DSM-IV criteria."),
            (Tokens{"participants", "met", "dsm-iv", "criteria"}));
  EXPECT_EQ(Tokenize("don't"), (Tokens{"don't"}));
  EXPECT_TRUE(Tokenize("").empty());
}

TEST(TokenizeTest, PunctuationAndEdgeHyphens) {
  EXPECT_EQ(Tokenize("(APA, 2013); -- 'quoted' well-- -x"),
            (Tokens{"apa", "2013", "quoted", "well", "x"}));
  EXPECT_EQ(Tokenize("3.5 kg"), (Tokens{"3", "5", "kg"}));
}

TEST(TokenizeTest, NonAsciiLettersKept) {
  EXPECT_EQ(Tokenize("Caf\xc3\xa9 \xe2\x80\x94 na\xc3\xafve"),
            (Tokens{"caf\xc3\xa9", "na\xc3\xafve"}));
}

TEST(TokenizeTest, OffsetsAddressSourceText) {
  const std::string text = "We used DSM-5 (APA, 2013).";
  for (const auto &t : TokenizeWithOffsets(text)) {
    EXPECT_EQ(AsciiLower(text.substr(t.begin, t.end - t.begin)), t.text);
  }
}

TEST(TokenizePropertyTest, CaseChangesDoNotChangeTokens) {
  std::mt19937 rng(1);
  const std::string alphabet = "abcXYZ019 -'.,()";
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    for (int k = 0; k < 30; ++k) s += alphabet[rng() % alphabet.size()];
    std::string upper = s;
    for (char &c : upper) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    EXPECT_EQ(Tokenize(s), Tokenize(upper));
    for (const auto &t : Tokenize(s)) {
      EXPECT_FALSE(t.empty());
      EXPECT_NE(t.front(), '-');
      EXPECT_NE(t.back(), '-');
    }
  }
}

TEST(TagsetTest, Classes) {
  EXPECT_TRUE(IsKnownTag("NNS"));
  EXPECT_TRUE(IsKnownTag("-LRB-"));
  EXPECT_FALSE(IsKnownTag("XYZ"));
  EXPECT_TRUE(IsVerbTag("VBG"));
  EXPECT_FALSE(IsVerbTag("MD"));
  EXPECT_TRUE(IsFiniteVerbTag("VBZ"));
  EXPECT_FALSE(IsFiniteVerbTag("VBN"));
}

}  // namespace
}  // namespace citectx
