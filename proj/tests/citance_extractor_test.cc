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

#include "citectx/citance_extractor.h"

#include <cctype>
#include <random>
#include <set>
#include <tuple>

#include "citectx/error.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace citectx {
namespace {

using testing::DocBuilder;

std::vector<std::string> Pieces(const std::string &text) {
  std::vector<std::string> out;
  for (const auto &s : SegmentSentences(text)) {
    out.push_back(text.substr(s.begin, s.end - s.begin));
  }
  return out;
}

TEST(SegmentSentencesTest, Examples) {
  EXPECT_EQ(Pieces("Patients met criteria. They were enrolled."),
            (std::vector<std::string>{"Patients met criteria.",
                                      "They were enrolled."}));
  EXPECT_EQ(Pieces("Criteria (e.g. mood) were used.").size(), 1u);
  EXPECT_TRUE(SegmentSentences("").empty());
}

TEST(SegmentSentencesTest, ProtectedContexts) {
  EXPECT_EQ(Pieces("Smith et al. Reported it. Fine.").size(), 2u);
  EXPECT_EQ(Pieces("See Fig. 2 for details.").size(), 1u);
  EXPECT_EQ(Pieces("Dr. Jones agreed.").size(), 1u);
  EXPECT_EQ(Pieces("Group A vs. B differed.").size(), 1u);
  EXPECT_EQ(Pieces("The mean was 3.5 points.").size(), 1u);
  EXPECT_EQ(Pieces("As J. Smith noted, it held.").size(), 1u);
  EXPECT_EQ(Pieces("Was it lower? Yes. It was!").size(), 3u);
  EXPECT_EQ(Pieces("He said \"stop.\" Then left.").size(), 2u);
  EXPECT_EQ(Pieces("It ended. (Then more.)").size(), 2u);
  EXPECT_EQ(Pieces("It ended. 2013 began.").size(), 2u);
  EXPECT_EQ(Pieces("lowercase. follows here").size(), 1u);
}

TEST(SegmentSentencesTest, ProtectedListIncludesCommonAbbreviations) {
  std::set<std::string> list;
  for (auto a : ProtectedAbbreviations()) list.insert(std::string(a));
  for (const char *a : {"e.g", "i.e", "et al", "fig", "dr", "vs"}) {
    bool found = list.count(a) || list.count(std::string(a) + ".");
    EXPECT_TRUE(found) << a;
  }
}

TEST(SegmentSentencesPropertyTest, SpansPartitionNonWhitespace) {
  std::mt19937 rng(23);
  const char *pieces[] = {"Word",  "word", " ",   ". ", "? ", "! ",  "e.g. ",
                          "Fig. ", "3.5",  "A. ", "(",  ")",  "\" ", "\n"};
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const int n = static_cast<int>(rng() % 25);
    for (int k = 0; k < n; ++k) text += pieces[rng() % 14];
    const auto spans = SegmentSentences(text);
    std::size_t prev = 0;
    for (const auto &s : spans) {
      ASSERT_LE(prev, s.begin);
      ASSERT_LT(s.begin, s.end);
      ASSERT_LE(s.end, text.size());
      for (std::size_t k = prev; k < s.begin; ++k) {
        EXPECT_TRUE(std::isspace(static_cast<unsigned char>(text[k])))
            << "[" << text << "]";
      }
      EXPECT_FALSE(std::isspace(static_cast<unsigned char>(text[s.begin])));
      EXPECT_FALSE(std::isspace(static_cast<unsigned char>(text[s.end - 1])));
      prev = s.end;
    }
    for (std::size_t k = prev; k < text.size(); ++k) {
      EXPECT_TRUE(std::isspace(static_cast<unsigned char>(text[k])));
    }
  }
}

ExtractionResult Extract(const Document &doc) {
  return ExtractCitances(doc, ClassifySections(doc, TitleRuleSet()),
                         VersionRegistry::Default());
}

TEST(ExtractCitancesTest, TwoAnchorsSameVersionInOneSentence) {
  const Document doc =
      DocBuilder("d")
          .Section("m", "Method")
          .Paragraph("m", "We used the manual (APA, 1994; APA, 1994b). Done.")
          .ApaReference("r1", 1994)
          .ApaReference("r2", 1994)
          .Anchor("m", 0, "APA, 1994;", {"r1"})
          .Anchor("m", 0, "APA, 1994b", {"r2"})
          .Build();
  const auto result = Extract(doc);
  ASSERT_EQ(result.citances.size(), 1u);
  const Citance &c = result.citances[0];
  EXPECT_EQ(c.version_id, "V4");
  EXPECT_EQ(c.section_kind, SectionKind::kMethod);
  EXPECT_EQ(c.sentence.text, "We used the manual (APA, 1994; APA, 1994b).");
  EXPECT_EQ(c.citing_year, 2016);
  EXPECT_EQ(c.object_history_years, 22);
  EXPECT_EQ(result.skipped_anchors, 0);
}

TEST(ExtractCitancesTest, TwoVersionsInOneSentence) {
  const Document doc = DocBuilder("d")
                           .Section("i", "Introduction")
                           .Paragraph("i", "Compare (APA, 1994, 2000).")
                           .ApaReference("r1", 1994)
                           .ApaReference("r2", 2000)
                           .Anchor("i", 0, "APA, 1994, 2000", {"r1", "r2"})
                           .Build();
  const auto result = Extract(doc);
  ASSERT_EQ(result.citances.size(), 2u);
  EXPECT_EQ(result.citances[0].version_id, "V4");
  EXPECT_EQ(result.citances[1].version_id, "V4-TR");
  EXPECT_EQ(result.citances[0].section_kind, SectionKind::kNonMethod);
}

TEST(ExtractCitancesTest, NonRegistryAnchorIsSkipped) {
  const Document doc = DocBuilder("d")
                           .Section("i", "Introduction")
                           .Paragraph("i", "Coding used ICD (WHO, 1992).")
                           .Reference("w", "WHO", 1992, "ICD-10")
                           .Anchor("i", 0, "WHO, 1992", {"w"})
                           .Build();
  const auto result = Extract(doc);
  EXPECT_TRUE(result.citances.empty());
  EXPECT_EQ(result.skipped_anchors, 1);
}

TEST(ExtractCitancesTest, FlaggedHistoryCarried) {
  const Document doc = DocBuilder("d", 1999)
                           .Section("i", "Introduction")
                           .Paragraph("i", "Forthcoming (APA, 2000).")
                           .ApaReference("r", 2000)
                           .Anchor("i", 0, "APA, 2000", {"r"})
                           .Build();
  const auto result = Extract(doc);
  ASSERT_EQ(result.citances.size(), 1u);
  EXPECT_EQ(result.citances[0].object_history_years, -1);
  EXPECT_TRUE(result.citances[0].history_flagged);
}

Citance WithKind(SectionKind kind, const std::string &doc = "d") {
  Citance c;
  c.doc_id = doc;
  c.section_kind = kind;
  return c;
}

TEST(CitancesPerPaperTest, Examples) {
  const std::vector<Citance> three = {WithKind(SectionKind::kMethod),
                                      WithKind(SectionKind::kMethod),
                                      WithKind(SectionKind::kNonMethod)};
  EXPECT_EQ(CitancesPerPaper(three), (CitanceCounts{3, 2, 1}));
  EXPECT_EQ(CitancesPerPaper({}), (CitanceCounts{0, 0, 0}));
  const std::vector<Citance> mixed = {WithKind(SectionKind::kMethod, "a"),
                                      WithKind(SectionKind::kMethod, "b")};
  try {
    CitancesPerPaper(mixed);
    FAIL() << "expected MixedDocuments";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedDocuments);
  }
}

// Random documents with anchors to registry and non-registry references.
Document RandomCitingDoc(std::mt19937 &rng, int id) {
  const char *titles[] = {"Introduction", "Method", "Participants",
                          "Experiment 1", "Results"};
  const int years[] = {1980, 1994, 2000, 2013, 2005};
  DocBuilder b("doc" + std::to_string(id), 2010 + static_cast<int>(rng() % 10));
  for (int r = 0; r < 5; ++r) b.ApaReference("r" + std::to_string(r), years[r]);
  b.Reference("w", "WHO", 1992, "ICD-10");
  const int sections = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < sections; ++s) {
    const std::string sid = "s" + std::to_string(s);
    std::optional<std::string> parent;
    if (s > 0 && rng() % 2) parent = "s" + std::to_string(rng() % s);
    b.Section(sid, titles[rng() % 5], parent);
    const int paras = 1 + static_cast<int>(rng() % 2);
    for (int p = 0; p < paras; ++p) {
      std::string text;
      std::vector<std::pair<std::string, std::vector<std::string>>> anchors;
      const int sentences = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < sentences; ++k) {
        const std::string marker = "[c" + std::to_string(p) + "." +
                                   std::to_string(k) + "]";
        text += "Sentence number " + std::to_string(k) + " cites " + marker +
                ". ";
        std::vector<std::string> refs;
        const int nrefs = 1 + static_cast<int>(rng() % 3);
        for (int q = 0; q < nrefs; ++q) {
          refs.push_back(rng() % 6 == 0 ? "w" : "r" + std::to_string(rng() % 5));
        }
        anchors.push_back({marker, refs});
      }
      b.Paragraph(sid, text);
      for (const auto &[marker, refs] : anchors) b.Anchor(sid, p, marker, refs);
    }
  }
  return b.Build();
}

TEST(ExtractCitancesPropertyTest, AnchorCoverageAndSectionKinds) {
  std::mt19937 rng(31);
  const auto registry = VersionRegistry::Default();
  for (int i = 0; i < 300; ++i) {
    const Document doc = RandomCitingDoc(rng, i);
    ASSERT_TRUE(ValidateDocument(doc).empty());
    const auto kinds = ClassifySections(doc, TitleRuleSet());
    const auto result = ExtractCitances(doc, kinds, registry);

    // Oracle: each anchor's marker is unique to one sentence, so the
    // expected citances are the distinct resolvable versions per anchor.
    std::set<std::tuple<std::string, std::int64_t, std::string, std::string>>
        expected;
    long skipped = 0;
    for (const auto &a : doc.anchors) {
      bool resolved = false;
      for (const auto &ref_id : a.ref_ids) {
        const auto v = ResolveReference(*doc.FindReference(ref_id), registry);
        if (!v) continue;
        resolved = true;
        expected.insert({a.section_id, a.paragraph_index,
                         std::to_string(a.char_start), *v});
      }
      skipped += !resolved;
    }
    std::set<std::tuple<std::string, std::int64_t, std::string, std::string>>
        actual;
    for (const auto &c : result.citances) {
      EXPECT_EQ(c.section_kind, kinds.at(c.sentence.section_id));
      EXPECT_EQ(c.doc_id, doc.doc_id);
      const auto &para = doc.FindSection(c.sentence.section_id)
                             ->paragraphs[c.sentence.paragraph_index]
                             .text;
      EXPECT_EQ(para.substr(c.sentence.char_start,
                            c.sentence.char_end - c.sentence.char_start),
                c.sentence.text);
      // Map the citance back to the anchor inside its sentence.
      for (const auto &a : doc.anchors) {
        if (a.section_id == c.sentence.section_id &&
            a.paragraph_index == c.sentence.paragraph_index &&
            static_cast<std::size_t>(a.char_start) >= c.sentence.char_start &&
            static_cast<std::size_t>(a.char_start) < c.sentence.char_end) {
          EXPECT_TRUE(actual
                          .insert({a.section_id, a.paragraph_index,
                                   std::to_string(a.char_start), c.version_id})
                          .second);
        }
      }
    }
    EXPECT_EQ(actual, expected);
    EXPECT_EQ(result.skipped_anchors, skipped);
  }
}

}  // namespace
}  // namespace citectx
