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

#ifndef CITECTX_SECTION_CLASSIFIER_H_
#define CITECTX_SECTION_CLASSIFIER_H_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "citectx/corpus.h"

namespace citectx {

enum class SectionKind { kMethod, kNonMethod };

std::string_view SectionKindName(SectionKind kind);  // "Method" / "NonMethod"

// Title keywords deciding whether a section heading names a Method section.
// Matching is by whole lowercase token; an exclude hit always wins.
struct TitleRuleSet {
  std::set<std::string> include_terms{"experimental", "methodology",
                                      "methodologies", "method", "methods"};
  std::set<std::string> exclude_terms{"experiment", "experiments"};

  // Throws Error(kInvalidConfig) if the two sets share a term.
  void Validate() const;
};

// Lowercase tokens of a heading, split on maximal non-alphanumeric runs.
std::set<std::string> TitleTokens(std::string_view title);

bool ClassifyTitle(std::string_view title, const TitleRuleSet &rules);

using SectionKinds = std::map<std::string, SectionKind>;

// A section is Method if its own title qualifies or any ancestor is Method.
// Throws Error(kCyclicSectionTree).
SectionKinds ClassifySections(const Document &doc, const TitleRuleSet &rules);

// Corpus-level count of papers with at least one Method section and of
// Method-bearing titles (sections whose own title qualifies).
struct MethodCoverage {
  long methodful_paper_count = 0;
  long method_section_instances = 0;
  std::map<std::string, long> per_title_counts;  // keyed by lowercased title

  void Add(const Document &doc, const TitleRuleSet &rules);
  void Merge(const MethodCoverage &other);

  bool operator==(const MethodCoverage &) const = default;
};

template <typename DocumentRange>
MethodCoverage ComputeMethodCoverage(const DocumentRange &docs,
                                     const TitleRuleSet &rules) {
  MethodCoverage coverage;
  for (const Document &doc : docs) coverage.Add(doc, rules);
  return coverage;
}

}  // namespace citectx

#endif  // CITECTX_SECTION_CLASSIFIER_H_
