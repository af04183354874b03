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

#ifndef CITECTX_CITANCE_EXTRACTOR_H_
#define CITECTX_CITANCE_EXTRACTOR_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citectx/corpus.h"
#include "citectx/lexicon.h"
#include "citectx/reference_resolver.h"
#include "citectx/section_classifier.h"

namespace citectx {

// A sentence span inside one paragraph; offsets are byte offsets into the
// paragraph text.
struct Sentence {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::string section_id;
  std::int64_t paragraph_index = 0;
};

struct SentenceSpan {
  std::size_t begin;
  std::size_t end;

  bool operator==(const SentenceSpan &) const = default;
};

// Abbreviations that never end a sentence (matched case-insensitively).
std::span<const std::string_view> ProtectedAbbreviations();

// Rule-based segmentation. A boundary is '.', '?' or '!' (plus any closing
// quotes or brackets) followed by whitespace and then an uppercase letter or
// digit, optionally behind an opening quote or bracket. Periods ending a
// listed abbreviation or a single capital initial never split. Spans exclude
// surrounding whitespace; the text between consecutive spans is whitespace.
std::vector<SentenceSpan> SegmentSentences(std::string_view paragraph);

struct Citance {
  std::string doc_id;
  Sentence sentence;
  VersionId version_id;
  SectionKind section_kind = SectionKind::kNonMethod;
  int citing_year = 0;
  int object_history_years = 0;
  bool history_flagged = false;
  // Tags for the sentence's tokens taken from the corpus, if annotated.
  std::optional<std::vector<std::string>> token_tags;
  FeatureVector features;
};

struct ExtractionResult {
  std::vector<Citance> citances;
  long skipped_anchors = 0;  // anchors with no reference in the registry
};

// One citance per (sentence, resolved version), in document order. The
// sentence containing an anchor's char_start hosts the citation.
ExtractionResult ExtractCitances(const Document &doc, const SectionKinds &kinds,
                                 const VersionRegistry &registry);

struct CitanceCounts {
  long total = 0;
  long method = 0;
  long non_method = 0;

  bool operator==(const CitanceCounts &) const = default;
};

// Throws Error(kMixedDocuments) unless every citance has the same doc_id.
CitanceCounts CitancesPerPaper(std::span<const Citance> citances);

}  // namespace citectx

#endif  // CITECTX_CITANCE_EXTRACTOR_H_
