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

#ifndef CITECTX_CORPUS_H_
#define CITECTX_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citectx {

// A paragraph of section text. token_tags, when present, carries one
// part-of-speech tag per token produced by Tokenize() over `text`.
struct Paragraph {
  std::string text;
  std::optional<std::vector<std::string>> token_tags;

  bool operator==(const Paragraph &) const = default;
};

struct SectionNode {
  std::string section_id;
  std::string title;
  std::optional<std::string> parent_id;
  std::vector<Paragraph> paragraphs;

  bool operator==(const SectionNode &) const = default;
};

struct ReferenceEntry {
  std::string ref_id;
  std::string lead_contributor;
  int year = 0;
  std::string title;

  bool operator==(const ReferenceEntry &) const = default;
};

// In-text citation pointer. Offsets are UTF-8 byte offsets into the
// addressed paragraph; the span is half-open.
struct CitationAnchor {
  std::string section_id;
  std::int64_t paragraph_index = 0;
  std::int64_t char_start = 0;
  std::int64_t char_end = 0;
  std::vector<std::string> ref_ids;

  bool operator==(const CitationAnchor &) const = default;
};

struct Document {
  std::string doc_id;
  int publication_year = 0;
  std::string journal_id;
  std::vector<SectionNode> sections;
  std::vector<ReferenceEntry> references;
  std::vector<CitationAnchor> anchors;

  const SectionNode *FindSection(std::string_view section_id) const;
  const ReferenceEntry *FindReference(std::string_view ref_id) const;

  bool operator==(const Document &) const = default;
};

// Parses one JSON Lines corpus record. Unknown keys are ignored.
// Throws Error(kMalformedRecord) on syntax or type errors and
// Error(kMissingField) when a required key is absent.
Document ParseDocumentRecord(std::string_view line);

// Renders a document as a single-line record accepted by
// ParseDocumentRecord. Paragraphs without tags are written as plain strings.
std::string SerializeDocument(const Document &doc);

struct Violation {
  std::string code;      // e.g. "OUT_OF_RANGE_ANCHOR"
  std::string location;  // e.g. "anchors[3]"
  std::string detail;

  bool operator==(const Violation &) const = default;
};

using ValidationReport = std::vector<Violation>;

// Checks every structural invariant of a parsed document. Violation codes:
// EMPTY_DOC_ID, DUPLICATE_SECTION_ID, UNKNOWN_PARENT, PARENT_NOT_EARLIER,
// CYCLIC_SECTION, DUPLICATE_REFERENCE_ID, UNKNOWN_ANCHOR_SECTION,
// PARAGRAPH_INDEX_OUT_OF_RANGE, INVALID_ANCHOR_SPAN, OUT_OF_RANGE_ANCHOR,
// EMPTY_ANCHOR_REFS, UNKNOWN_ANCHOR_REFERENCE, TOKEN_TAG_COUNT_MISMATCH,
// UNKNOWN_TAG.
ValidationReport ValidateDocument(const Document &doc);

struct FlatSection {
  const SectionNode *section;
  int depth;
  std::vector<std::string> ancestor_ids;  // root first
};

// Sections in document order with their depth in the parent tree. A parent
// id that names no section is treated as a root. Throws
// Error(kCyclicSectionTree) if a parent chain loops.
std::vector<FlatSection> FlattenSections(const Document &doc);

}  // namespace citectx

#endif  // CITECTX_CORPUS_H_
