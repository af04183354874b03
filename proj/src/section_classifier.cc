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

#include <algorithm>
#include <cctype>

#include "citectx/error.h"
#include "citectx/tokenizer.h"

namespace citectx {

std::string_view SectionKindName(SectionKind kind) {
  return kind == SectionKind::kMethod ? "Method" : "NonMethod";
}

void TitleRuleSet::Validate() const {
  for (const auto &term : include_terms) {
    if (exclude_terms.count(term)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "term '" + term + "' is both included and excluded");
    }
  }
}

std::set<std::string> TitleTokens(std::string_view title) {
  std::set<std::string> tokens;
  std::string current;
  for (char c : title) {
    const auto u = static_cast<unsigned char>(c);
    // Bytes of multi-byte code points are kept so non-ASCII letters do not
    // split a word.
    if (std::isalnum(u) || u >= 0x80) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.insert(AsciiLower(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.insert(AsciiLower(current));
  return tokens;
}

bool ClassifyTitle(std::string_view title, const TitleRuleSet &rules) {
  bool included = false;
  for (const auto &tok : TitleTokens(title)) {
    if (rules.exclude_terms.count(tok)) return false;
    if (rules.include_terms.count(tok)) included = true;
  }
  return included;
}

SectionKinds ClassifySections(const Document &doc, const TitleRuleSet &rules) {
  SectionKinds kinds;
  std::map<std::string, bool> own;
  for (const auto &s : doc.sections) {
    own.emplace(s.section_id, ClassifyTitle(s.title, rules));
  }
  for (const auto &flat : FlattenSections(doc)) {
    bool method = own[flat.section->section_id];
    for (const auto &a : flat.ancestor_ids) {
      if (own[a]) method = true;
    }
    kinds.emplace(flat.section->section_id,
                  method ? SectionKind::kMethod : SectionKind::kNonMethod);
  }
  return kinds;
}

void MethodCoverage::Add(const Document &doc, const TitleRuleSet &rules) {
  bool any = false;
  for (const auto &s : doc.sections) {
    if (ClassifyTitle(s.title, rules)) {
      any = true;
      ++method_section_instances;
      ++per_title_counts[AsciiLower(s.title)];
    }
  }
  if (any) ++methodful_paper_count;
}

void MethodCoverage::Merge(const MethodCoverage &other) {
  methodful_paper_count += other.methodful_paper_count;
  method_section_instances += other.method_section_instances;
  for (const auto &[title, n] : other.per_title_counts) {
    per_title_counts[title] += n;
  }
}

}  // namespace citectx
