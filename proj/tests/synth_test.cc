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

#include "citectx/synth.h"

#include <cmath>

#include "citectx/error.h"
#include "citectx/pipeline.h"
#include "citectx/verb_profiler.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace citectx {
namespace {

constexpr char kSmallSpec[] = R"({
  "seed": 7, "n_docs": 1500,
  "citances_per_paper": {"min": 1, "max": 4},
  "versions": [
    {"id": "V4", "history_years": [0, 4], "citances_per_year": 200,
     "method_ratio": {"start": 0.1, "end": 0.6}},
    {"id": "V5", "history_years": [0, 3],
     "citances_per_year": {"start": 100, "end": 160}, "method_ratio": 0.5}
  ],
  "marker_probabilities": {
    "method": {"hedges": 0.05, "boosters": 0.10, "attitude": 0.05,
               "self_mention": 0.20, "engagement": 0.10},
    "non_method": {"hedges": 0.20, "boosters": 0.05, "attitude": 0.10,
                   "self_mention": 0.05, "engagement": 0.20}
  },
  "verb_pools": {"method": ["use", "meet", "include", "assess"],
                 "non_method": ["report", "suggest", "find"]},
  "methodless_fraction": 0.3,
  "distractor_anchors": 25
})";

SynthSpec Small() { return SynthSpec::FromJson(kSmallSpec); }

std::vector<std::string> Lines(const SynthOutput &out) {
  std::vector<std::string> lines;
  for (const auto &d : out.documents) lines.push_back(SerializeDocument(d));
  return lines;
}

TEST(SynthTest, SameSeedSameOutput) {
  const auto registry = VersionRegistry::Default();
  const auto a = GenerateSynthCorpus(Small(), registry);
  const auto b = GenerateSynthCorpus(Small(), registry);
  EXPECT_EQ(Lines(a), Lines(b));
  EXPECT_EQ(a.ground_truth.dump(), b.ground_truth.dump());
  auto other = Small();
  other.seed = 8;
  EXPECT_NE(Lines(GenerateSynthCorpus(other, registry)), Lines(a));
}

TEST(SynthTest, SidecarEchoesCurvesAndExactCounts) {
  const auto out = GenerateSynthCorpus(Small(), VersionRegistry::Default());
  const auto &truth = out.ground_truth;
  EXPECT_EQ(truth["method_ratio_curves"]["V4"]["method_ratio"]["start"], 0.1);
  EXPECT_EQ(truth["method_ratio_curves"]["V4"]["method_ratio"]["end"], 0.6);
  EXPECT_EQ(truth["documents"], 1500);
  EXPECT_EQ(truth["skipped_anchors"], 25);
  long v4 = 0, v5 = 0;
  for (const auto &b : truth["buckets"]) {
    const long n = b["n_citances"];
    const int h = b["object_history_year"];
    if (b["version_id"] == "V4") {
      EXPECT_EQ(n, 200);
      const double ratio = 0.1 + 0.5 * h / 4.0;
      EXPECT_EQ(b["n_method"].get<long>(), std::lround(ratio * n));
      v4 += n;
    } else {
      EXPECT_EQ(n, std::lround(100 + 60.0 * h / 3.0));
      v5 += n;
    }
    EXPECT_EQ(b["n_method"].get<long>() + b["n_non_method"].get<long>(), n);
  }
  EXPECT_EQ(v4, 1000);
  EXPECT_EQ(v5, 100 + 120 + 140 + 160);
}

TEST(SynthTest, EveryDocumentValidates) {
  const auto out = GenerateSynthCorpus(Small(), VersionRegistry::Default());
  for (const auto &d : out.documents) {
    EXPECT_TRUE(ValidateDocument(d).empty()) << d.doc_id;
    EXPECT_EQ(ParseDocumentRecord(SerializeDocument(d)), d);
  }
}

TEST(SynthTest, AnalysisRecoversPlantedCounts) {
  const auto out = GenerateSynthCorpus(Small(), VersionRegistry::Default());
  const auto &truth = out.ground_truth;
  AnalysisConfig config;
  const auto ctx = AnalysisContext::Load(config);
  const auto analysis = AnalyzeCorpus(Lines(out), ctx, 3, false);
  const auto &agg = analysis.aggregate;

  EXPECT_EQ(agg.documents, truth["documents"].get<long>());
  EXPECT_EQ(agg.skipped_anchors, truth["skipped_anchors"].get<long>());
  EXPECT_EQ(agg.coverage.methodful_paper_count,
            truth["methodful_documents"].get<long>());
  for (const auto &b : truth["buckets"]) {
    const BucketKey key{b["version_id"], b["object_history_year"]};
    const GroupStats &stats = agg.by_bucket.at(key);
    EXPECT_EQ(stats.citances, b["n_citances"].get<long>());
    EXPECT_EQ(stats.method_citances, b["n_method"].get<long>());
    for (MarkerCategory m : kAllMarkerCategories) {
      const auto &entry = b["markers"][std::string(MarkerCategoryName(m))];
      EXPECT_EQ(stats.marker_hits[static_cast<std::size_t>(m)],
                entry["method_hits"].get<long>() +
                    entry["non_method_hits"].get<long>())
          << MarkerCategoryName(m);
    }
  }
  for (const auto &v : truth["versions"]) {
    const std::string id = v["version_id"];
    const auto &stats = agg.by_version.at(id);
    EXPECT_EQ(stats.papers, v["citing_papers"].get<long>());
    EXPECT_EQ(stats.method_papers,
              v["citing_papers_with_method_citance"].get<long>());
    EXPECT_EQ(stats.citances, v["citances"].get<long>());
    for (const auto &[kind, name] :
         {std::pair{SectionKind::kMethod, "Method"},
          std::pair{SectionKind::kNonMethod, "NonMethod"}}) {
      using Bag = std::map<std::string, long>;
      const Bag expected = v["verbs"][name].get<Bag>();
      EXPECT_EQ(agg.verb_counts.at({id, kind}), expected)
          << id << " " << name;
    }
  }
}

TEST(SynthTest, PlantedMethodfulPaperCount) {
  auto spec = SynthSpec::FromJson(R"({
    "seed": 3, "n_docs": 10, "citances_per_paper": {"min": 1, "max": 1},
    "versions": [{"id": "V5", "history_years": [0, 6],
                  "citances_per_year": 1, "method_ratio": 0.5}],
    "marker_probabilities": {"method": {}, "non_method": {}},
    "verb_pools": {"method": ["use"], "non_method": ["report"]},
    "methodless_fraction": 1.0})");
  const auto out = GenerateSynthCorpus(spec, VersionRegistry::Default());
  EXPECT_EQ(out.ground_truth["citing_documents"], 7);
  EXPECT_EQ(ComputeMethodCoverage(out.documents, TitleRuleSet())
                .methodful_paper_count,
            7);
}

TEST(SynthTest, PlantedDocumentCountsPerPaper) {
  const auto out = GenerateSynthCorpus(Small(), VersionRegistry::Default());
  const auto ctx = AnalysisContext::Load(AnalysisConfig{});
  // A planted paper with 4 citances: per-paper counts agree with its plan.
  for (const auto &doc : out.documents) {
    const auto result = AnalyzeDocument(doc, ctx);
    if (result.citances.size() != 4) continue;
    long method = 0;
    for (const auto &c : result.citances) {
      method += c.section_kind == SectionKind::kMethod;
    }
    EXPECT_EQ(CitancesPerPaper(result.citances),
              (CitanceCounts{4, method, 4 - method}));
  }
}

TEST(SynthSpecTest, InvalidSpecs) {
  const auto registry = VersionRegistry::Default();
  auto expect_invalid = [&](auto mutate) {
    auto spec = Small();
    mutate(spec);
    try {
      spec.Validate(registry);
      FAIL() << "expected InvalidConfig";
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
    }
  };
  expect_invalid([](SynthSpec &s) { s.marker_probability[0][0] = 1.5; });
  expect_invalid([](SynthSpec &s) { s.methodless_fraction = -0.1; });
  expect_invalid([](SynthSpec &s) { s.versions[0].version_id = "V9"; });
  expect_invalid([](SynthSpec &s) { s.verb_pools[1].push_back("use"); });
  expect_invalid([](SynthSpec &s) { s.verb_pools[1].clear(); });
  expect_invalid([](SynthSpec &s) { s.citances_per_paper_min = 0; });
  EXPECT_NO_THROW(Small().Validate(registry));
  EXPECT_THROW(SynthSpec::FromJson("{}"), Error);
  auto tiny = Small();
  tiny.n_docs = 10;
  EXPECT_THROW(GenerateSynthCorpus(tiny, registry), Error);
}

TEST(PastTenseTest, RoundTripsThroughLemmatizer) {
  EXPECT_EQ(PastTense("meet"), "met");
  EXPECT_EQ(PastTense("use"), "used");
  EXPECT_EQ(PastTense("classify"), "classified");
  EXPECT_EQ(PastTense("admit"), "admitted");
  for (const char *lemma :
       {"include", "meet", "use", "assess", "diagnose", "exclude", "recruit",
        "administer", "screen", "interview", "classify", "select", "report",
        "suggest", "describe", "estimate", "find", "propose", "indicate",
        "characterize", "recognize", "introduce", "revise", "emphasize"}) {
    EXPECT_EQ(LemmatizeVerb(PastTense(lemma), "VBD"), lemma);
  }
}

}  // namespace
}  // namespace citectx
