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

#include "citectx/section_classifier.h"

#include <cctype>
#include <random>

#include "citectx/error.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace citectx {
namespace {

using testing::DocBuilder;

TEST(ClassifyTitleTest, Examples) {
  const TitleRuleSet rules;
  EXPECT_TRUE(ClassifyTitle("Methods", rules));
  EXPECT_FALSE(ClassifyTitle("Experiment 2", rules));
  EXPECT_FALSE(ClassifyTitle("Experiment 1: Method", rules));
  EXPECT_TRUE(ClassifyTitle("Experimental procedure", rules));
}

TEST(ClassifyTitleTest, TitleTokensSplitOnNonAlphanumericRuns) {
  EXPECT_EQ(TitleTokens("2.1 Methods:"),
            (std::set<std::string>{"2", "1", "methods"}));
  EXPECT_TRUE(TitleTokens(" -- ").empty());
}

TEST(ClassifyTitleTest, CustomRules) {
  TitleRuleSet rules;
  rules.include_terms.insert("procedure");
  EXPECT_TRUE(ClassifyTitle("Procedure", rules));
  rules.exclude_terms.insert("pilot");
  EXPECT_FALSE(ClassifyTitle("Pilot procedure", rules));
}

TEST(TitleRuleSetTest, OverlappingSetsRejected) {
  TitleRuleSet rules;
  rules.exclude_terms.insert("methods");
  try {
    rules.Validate();
    FAIL() << "expected InvalidConfig";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
  }
  EXPECT_NO_THROW(TitleRuleSet().Validate());
}

TEST(ClassifySectionsTest, Examples) {
  const TitleRuleSet rules;
  const auto kinds = ClassifySections(DocBuilder("d")
                                          .Section("e", "Experiment 1")
                                          .Section("m", "Method", "e")
                                          .Section("p", "Participants", "m")
                                          .Build(),
                                      rules);
  EXPECT_EQ(kinds.at("e"), SectionKind::kNonMethod);
  EXPECT_EQ(kinds.at("m"), SectionKind::kMethod);
  EXPECT_EQ(kinds.at("p"), SectionKind::kMethod);

  const auto discussion = ClassifySections(DocBuilder("d")
                                               .Section("d", "Discussion")
                                               .Section("l", "Limitations", "d")
                                               .Build(),
                                           rules);
  EXPECT_EQ(discussion.at("d"), SectionKind::kNonMethod);
  EXPECT_EQ(discussion.at("l"), SectionKind::kNonMethod);

  const auto data =
      ClassifySections(DocBuilder("d").Section("a", "Data analysis").Build(),
                       rules);
  EXPECT_EQ(data.at("a"), SectionKind::kNonMethod);
}

TEST(ClassifySectionsTest, GoldenSuite) {
  const auto cases =
      nlohmann::json::parse(testing::Slurp(testing::TestDataPath(
          "section_golden.json")));
  ASSERT_EQ(cases.size(), 50u);
  const TitleRuleSet rules;
  for (const auto &c : cases) {
    DocBuilder builder("golden");
    for (const auto &s : c["sections"]) {
      std::optional<std::string> parent;
      if (!s[2].is_null()) parent = s[2].get<std::string>();
      builder.Section(s[0].get<std::string>(), s[1].get<std::string>(),
                      parent);
    }
    const auto kinds = ClassifySections(builder.Build(), rules);
    ASSERT_EQ(kinds.size(), c["expect"].size()) << c["name"];
    for (const auto &[id, kind] : c["expect"].items()) {
      EXPECT_EQ(SectionKindName(kinds.at(id)), kind.get<std::string>())
          << c["name"] << " section " << id;
    }
  }
}

TEST(MethodCoverageTest, TwoDocuments) {
  const std::vector<Document> docs = {
      DocBuilder("a").Section("s", "Methods").Build(),
      DocBuilder("b").Section("s", "Introduction").Build()};
  const auto coverage = ComputeMethodCoverage(docs, TitleRuleSet());
  EXPECT_EQ(coverage.methodful_paper_count, 1);
  EXPECT_EQ(coverage.method_section_instances, 1);
  EXPECT_EQ(coverage.per_title_counts,
            (std::map<std::string, long>{{"methods", 1}}));
}

TEST(MethodCoverageTest, EmptyCorpus) {
  const auto coverage =
      ComputeMethodCoverage(std::vector<Document>{}, TitleRuleSet());
  EXPECT_EQ(coverage, MethodCoverage{});
}

TEST(MethodCoverageTest, MergeMatchesSequentialAdd) {
  const TitleRuleSet rules;
  const std::vector<Document> docs = {
      DocBuilder("a").Section("s", "Methods").Build(),
      DocBuilder("b").Section("s", "Method").Section("t", "Methods").Build(),
      DocBuilder("c").Section("s", "Results").Build()};
  MethodCoverage left, right;
  left.Add(docs[0], rules);
  right.Add(docs[1], rules);
  right.Add(docs[2], rules);
  left.Merge(right);
  EXPECT_EQ(left, ComputeMethodCoverage(docs, rules));
  EXPECT_EQ(left.methodful_paper_count, 2);
  EXPECT_EQ(left.method_section_instances, 3);
}

// Random section trees over a vocabulary mixing include, exclude and
// neutral words.
Document RandomTree(std::mt19937 &rng) {
  const char *words[] = {"Method",  "methods",    "Experiment", "EXPERIMENTS",
                         "Results", "Participants", "experimental",
                         "Methodology", "Data", "2.1", "Discussion"};
  DocBuilder builder("r");
  const int n = 1 + static_cast<int>(rng() % 10);
  for (int i = 0; i < n; ++i) {
    std::string title;
    const int len = 1 + static_cast<int>(rng() % 3);
    for (int w = 0; w < len; ++w) {
      if (w) title += (rng() % 2) ? " " : ": ";
      title += words[rng() % 11];
    }
    std::optional<std::string> parent;
    if (i > 0 && rng() % 3) parent = "s" + std::to_string(rng() % i);
    builder.Section("s" + std::to_string(i), title, parent);
  }
  return builder.Build();
}

std::string Upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

TEST(SectionClassifierPropertyTest, DescendantsOfMethodAreMethod) {
  std::mt19937 rng(3);
  const TitleRuleSet rules;
  for (int i = 0; i < 500; ++i) {
    const Document doc = RandomTree(rng);
    const auto kinds = ClassifySections(doc, rules);
    ASSERT_EQ(kinds.size(), doc.sections.size());
    for (const auto &f : FlattenSections(doc)) {
      for (const auto &ancestor : f.ancestor_ids) {
        if (kinds.at(ancestor) == SectionKind::kMethod) {
          EXPECT_EQ(kinds.at(f.section->section_id), SectionKind::kMethod);
        }
      }
    }
  }
}

TEST(SectionClassifierPropertyTest, CaseInsensitiveAndExclusionDominates) {
  std::mt19937 rng(5);
  const TitleRuleSet rules;
  for (int i = 0; i < 500; ++i) {
    for (const auto &s : RandomTree(rng).sections) {
      EXPECT_EQ(ClassifyTitle(s.title, rules),
                ClassifyTitle(Upper(s.title), rules));
      const auto tokens = TitleTokens(s.title);
      bool excluded = false;
      for (const auto &t : tokens) excluded |= rules.exclude_terms.count(t) > 0;
      if (excluded) EXPECT_FALSE(ClassifyTitle(s.title, rules)) << s.title;
    }
  }
}

TEST(SectionClassifierPropertyTest, FilteringToMethodfulKeepsKinds) {
  std::mt19937 rng(9);
  const TitleRuleSet rules;
  std::vector<Document> corpus;
  for (int i = 0; i < 200; ++i) corpus.push_back(RandomTree(rng));
  std::vector<SectionKinds> before;
  for (const auto &doc : corpus) before.push_back(ClassifySections(doc, rules));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool methodful = false;
    for (const auto &[id, kind] : before[i]) {
      methodful |= kind == SectionKind::kMethod;
    }
    if (methodful) EXPECT_EQ(ClassifySections(corpus[i], rules), before[i]);
  }
}

}  // namespace
}  // namespace citectx
