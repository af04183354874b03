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

#include "citectx/reference_resolver.h"

#include <random>

#include "citectx/error.h"
#include "gtest/gtest.h"

namespace citectx {
namespace {

constexpr char kApa[] = "American Psychiatric Association";

std::string Key(const std::string &contributor, int year,
                const std::string &title) {
  return BuildReferenceKey({"r", contributor, year, title}).Render();
}

TEST(BuildReferenceKeyTest, Examples) {
  EXPECT_EQ(Key(kApa, 2013,
                "The Diagnostic and Statistical Manual of Mental Disorders"),
            "americanpsychiatricassoci_2013_the");
  EXPECT_EQ(Key(kApa, 2013, "American Psychiatric Association: DSM-5"),
            "americanpsychiatricassoci_2013_ame");
  EXPECT_EQ(Key("Li, K.", 2019, "Challenges of measuring software impact"),
            "lik_2019_cha");
}

TEST(BuildReferenceKeyTest, EmptyAfterNormalization) {
  for (const auto &[contributor, title] :
       {std::pair<std::string, std::string>{"--", "Title"}, {"Li", "..."}}) {
    try {
      BuildReferenceKey({"r", contributor, 2000, title});
      FAIL() << "expected EmptyAfterNormalization";
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyAfterNormalization);
    }
  }
}

TEST(ParseReferenceKeyTest, InvertsRender) {
  const auto key = ParseReferenceKey("americanpsychiatricassoci_2013_the");
  ASSERT_TRUE(key.has_value());
  EXPECT_EQ(key->contributor_norm, "americanpsychiatricassoci");
  EXPECT_EQ(key->year, 2013);
  EXPECT_EQ(key->title_prefix, "the");
  EXPECT_FALSE(ParseReferenceKey("nounderscores").has_value());
  EXPECT_FALSE(ParseReferenceKey("a_year_the").has_value());
}

std::optional<VersionId> MatchKey(const std::string &key) {
  return MatchVersion(*ParseReferenceKey(key), VersionRegistry::Default());
}

TEST(MatchVersionTest, Examples) {
  EXPECT_EQ(MatchKey("americanpsychiatricassoci_2013_the"), "V5");
  EXPECT_EQ(MatchKey("americanpsychiatricassoci_2013_ame"), "V5");
  EXPECT_EQ(MatchKey("americanpsychiatricassoci_2005_dsm"), std::nullopt);
  EXPECT_EQ(MatchKey("americanpsychiatricassoci_2013_xyz"), std::nullopt);
  EXPECT_EQ(MatchKey("who_1992_icd"), std::nullopt);
}

TEST(MatchVersionTest, EveryEditionYear) {
  const std::pair<int, const char *> editions[] = {
      {1952, "V1"}, {1968, "V2"},    {1980, "V3"}, {1987, "V3-TR"},
      {1994, "V4"}, {2000, "V4-TR"}, {2013, "V5"}};
  for (const auto &[year, id] : editions) {
    for (const char *prefix : {"the", "dia", "dsm", "ame"}) {
      EXPECT_EQ(MatchKey("americanpsychiatricassoci_" + std::to_string(year) +
                         "_" + prefix),
                id);
    }
    EXPECT_EQ(MatchKey("americanpsychiatricassoci_" +
                       std::to_string(year + 1) + "_the"),
              std::nullopt);
  }
}

TEST(ResolveReferenceTest, UnkeyableResolvesToNothing) {
  EXPECT_EQ(ResolveReference({"r", "", 2013, "The manual"},
                             VersionRegistry::Default()),
            std::nullopt);
  EXPECT_EQ(ResolveReference({"r", kApa, 1994, "Diagnostic and statistical"},
                             VersionRegistry::Default()),
            "V4");
}

TEST(ObjectHistoryTest, Examples) {
  const auto registry = VersionRegistry::Default();
  EXPECT_EQ(ComputeObjectHistory("V5", 2016, registry).years, 3);
  EXPECT_FALSE(ComputeObjectHistory("V5", 2016, registry).flagged);
  EXPECT_EQ(ComputeObjectHistory("V4", 1994, registry).years, 0);
  const auto early = ComputeObjectHistory("V4-TR", 1999, registry);
  EXPECT_EQ(early.years, -1);
  EXPECT_TRUE(early.flagged);
  try {
    ComputeObjectHistory("V9", 2016, registry);
    FAIL() << "expected UnknownVersion";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVersion);
  }
}

TEST(VersionRegistryTest, DuplicateYearIsAmbiguous) {
  try {
    VersionRegistry("x", {{"A", "a", 2000}, {"B", "b", 2000}}, {"the"});
    FAIL() << "expected AmbiguousRegistry";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kAmbiguousRegistry);
  }
}

TEST(VersionRegistryTest, JsonMatchesDefault) {
  const auto registry = VersionRegistry::FromJson(R"({
    "author_norm": "worldhealthorganization",
    "title_prefixes": ["int", "icd"],
    "versions": [{"id": "ICD-10", "label": "10th", "year": 1992}]})");
  EXPECT_EQ(MatchVersion(*ParseReferenceKey("worldhealthorganization_1992_icd"),
                         registry),
            "ICD-10");
  EXPECT_EQ(registry.IndexOf("ICD-10"), 0u);
  EXPECT_EQ(VersionRegistry::Default().entries().size(), 7u);
  EXPECT_THROW(VersionRegistry::FromJson("{\"versions\": 3}"), Error);
}

TEST(ReferenceKeyPropertyTest, NormalizationIsIdempotent) {
  std::mt19937 rng(17);
  const std::string alphabet = "AbC xyz,.-'&9\xc3\xa9";
  for (int i = 0; i < 2000; ++i) {
    std::string contributor, title;
    for (int k = 0; k < 40; ++k) {
      contributor += alphabet[rng() % alphabet.size()];
      title += alphabet[rng() % alphabet.size()];
    }
    ReferenceKey key;
    try {
      key = BuildReferenceKey({"r", contributor, 1990, title});
    } catch (const Error &) {
      continue;
    }
    EXPECT_LE(key.contributor_norm.size(), kContributorKeyLength);
    EXPECT_LE(key.title_prefix.size(), kTitlePrefixLength);
    EXPECT_EQ(NormalizeKeyText(key.contributor_norm), key.contributor_norm);
    EXPECT_EQ(NormalizeKeyText(key.title_prefix), key.title_prefix);
    EXPECT_EQ(BuildReferenceKey({"r", key.contributor_norm, key.year,
                                 key.title_prefix}),
              key);
    EXPECT_EQ(ParseReferenceKey(key.Render()), key);
  }
}

TEST(ReferenceKeyPropertyTest, AtMostOneVersionPerKey) {
  const auto registry = VersionRegistry::Default();
  for (int year = 1940; year <= 2030; ++year) {
    int matches = 0;
    for (const auto &entry : registry.entries()) {
      matches += entry.publication_year == year;
    }
    const auto v = MatchKey("americanpsychiatricassoci_" +
                            std::to_string(year) + "_the");
    EXPECT_EQ(v.has_value(), matches == 1);
    EXPECT_LE(matches, 1);
  }
}

}  // namespace
}  // namespace citectx
