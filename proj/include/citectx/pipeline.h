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

#ifndef CITECTX_PIPELINE_H_
#define CITECTX_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "citectx/analytics.h"
#include "citectx/citance_extractor.h"
#include "citectx/corpus.h"
#include "citectx/lexicon.h"
#include "citectx/pos_tagger.h"
#include "citectx/reference_resolver.h"
#include "citectx/section_classifier.h"

namespace citectx {

struct AnalysisConfig {
  std::string corpus_path;
  std::string registry_path;      // empty: built-in DSM registry
  std::string lexicon_path;       // empty: starter lexicon
  std::string tagger_model_path;  // empty: DefaultTaggerModelPath()
  std::string output_dir;
  std::string emit_citances_path;  // empty: no citance dump
  long suppression_min = kDefaultSuppressionMin;
  long verb_min_count = kDefaultVerbMinCount;
  std::set<std::string> stopverbs = DefaultStopVerbs();
  std::vector<VersionId> version_include_list = {"V3-TR", "V4", "V4-TR",
                                                 "V5"};
  TitleRuleSet title_rules;
  int worker_count = 1;
  // Only papers with at least one Method section contribute citances.
  bool methodful_only = true;
  std::size_t top_verbs = 10;

  // Applies keys from a JSON config object over the current values.
  // Throws Error(kInvalidConfig) on unknown keys or wrong types.
  void ApplyJson(std::string_view text);

  // Throws Error(kInvalidConfig).
  void Validate() const;
};

// Location of the shipped tagger model (compiled in; overridable with the
// CITECTX_TAGGER_MODEL environment variable).
std::string DefaultTaggerModelPath();

// Loaded, immutable analysis resources.
struct AnalysisContext {
  VersionRegistry registry = VersionRegistry::Default();
  MarkerLexicon lexicon = MarkerLexicon::Starter();
  PosTagger tagger;
  TitleRuleSet title_rules;
  bool methodful_only = true;

  // Throws Error on unreadable or invalid resources.
  static AnalysisContext Load(const AnalysisConfig &config);
};

// Fills the feature vector (markers, readability, primary verbs).
void ComputeFeatures(Citance &citance, const AnalysisContext &ctx);

// Linguistic features of free text treated as a single sentence.
struct SentenceInspection {
  std::vector<std::string> tokens;
  std::vector<TaggedToken> tagged;
  FeatureVector features;
  std::vector<int> syllables;
};
SentenceInspection InspectSentence(std::string_view sentence,
                                   const AnalysisContext &ctx);

struct DocumentResult {
  bool valid = true;
  int year = 0;
  std::vector<Citance> citances;
  long skipped_anchors = 0;
  MethodCoverage coverage;
};

// Validates, classifies, extracts and scores one document.
DocumentResult AnalyzeDocument(const Document &doc,
                               const AnalysisContext &ctx);

struct CorpusAnalysis {
  CorpusAggregate aggregate;
  std::vector<Citance> citances;  // kept only when requested
  long malformed_records = 0;
};

// Analyzes corpus lines on `workers` threads. Each worker folds a
// contiguous slice; slices merge in corpus order, so output does not depend
// on the worker count.
CorpusAnalysis AnalyzeCorpus(const std::vector<std::string> &lines,
                             const AnalysisContext &ctx, int workers,
                             bool keep_citances);

// Whole file contents. Throws Error(kIoError).
std::string ReadTextFile(const std::string &path);

// Reads a corpus file into non-empty lines. Throws Error(kIoError).
std::vector<std::string> ReadCorpusLines(const std::string &path);

// Report file names, in write order.
std::vector<std::string> ReportFileNames();

// Writes the six CSV reports into `dir` (which must exist).
void WriteReports(const CorpusAggregate &agg, const AnalysisContext &ctx,
                  const AnalysisConfig &config,
                  const std::filesystem::path &dir);

// One JSON object per citance, one per line.
void WriteCitancesJsonl(const std::vector<Citance> &citances,
                        const std::filesystem::path &path);
std::string CitanceToJson(const Citance &citance);

// Full analyze run: load resources, analyze, write reports atomically into
// config.output_dir (replacing it), and the citance dump if requested.
CorpusAnalysis RunAnalysis(const AnalysisConfig &config);

}  // namespace citectx

#endif  // CITECTX_PIPELINE_H_
