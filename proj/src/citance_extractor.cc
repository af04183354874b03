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

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "citectx/error.h"
#include "citectx/tokenizer.h"

namespace citectx {
namespace {

constexpr std::array<std::string_view, 38> kAbbreviations = {
    "e.g.",  "i.e.",   "et al.", "cf.",   "vs.",   "viz.",   "fig.",
    "figs.", "tab.",   "eq.",    "eqs.",  "no.",   "nos.",   "vol.",
    "vols.", "p.",     "pp.",    "ch.",   "sec.",  "sect.",  "ed.",
    "eds.",  "rev.",   "dr.",    "mr.",   "mrs.",  "ms.",    "prof.",
    "st.",   "jr.",    "sr.",    "inc.",  "approx.", "ca.",  "resp.",
    "min.",  "max.",   "u.s."};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsUpperOrDigit(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool IsClosing(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool IsOpening(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

bool IsWordBoundaryBefore(std::string_view text, std::size_t pos) {
  return pos == 0 || IsSpace(text[pos - 1]) || IsOpening(text[pos - 1]);
}

// True if the period at `dot` ends a protected abbreviation or initial.
bool IsProtectedPeriod(std::string_view text, std::size_t dot) {
  for (std::string_view abbr : kAbbreviations) {
    if (abbr.size() > dot + 1) continue;
    const std::size_t start = dot + 1 - abbr.size();
    if (AsciiLower(text.substr(start, abbr.size())) == abbr &&
        IsWordBoundaryBefore(text, start)) {
      return true;
    }
  }
  // Single capital initial, e.g. "J. Smith".
  if (dot >= 1 && text[dot - 1] >= 'A' && text[dot - 1] <= 'Z' &&
      IsWordBoundaryBefore(text, dot - 1)) {
    return true;
  }
  return false;
}

void PushTrimmed(std::string_view text, std::size_t begin, std::size_t end,
                 std::vector<SentenceSpan> &out) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  if (begin < end) out.push_back({begin, end});
}

}  // namespace

std::span<const std::string_view> ProtectedAbbreviations() {
  return kAbbreviations;
}

std::vector<SentenceSpan> SegmentSentences(std::string_view paragraph) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = paragraph.size();
  std::size_t sentence_start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = paragraph[i];
    if (c != '.' && c != '?' && c != '!') continue;
    std::size_t j = i + 1;
    while (j < n && IsClosing(paragraph[j])) ++j;
    if (j >= n || !IsSpace(paragraph[j])) continue;
    std::size_t k = j;
    while (k < n && IsSpace(paragraph[k])) ++k;
    while (k < n && IsOpening(paragraph[k])) ++k;
    if (k >= n || !IsUpperOrDigit(paragraph[k])) continue;
    if (c == '.' && IsProtectedPeriod(paragraph, i)) continue;
    PushTrimmed(paragraph, sentence_start, j, spans);
    sentence_start = j;
    i = j - 1;
  }
  PushTrimmed(paragraph, sentence_start, n, spans);
  return spans;
}

ExtractionResult ExtractCitances(const Document &doc, const SectionKinds &kinds,
                                 const VersionRegistry &registry) {
  ExtractionResult result;

  // Resolve each reference once.
  std::map<std::string, std::optional<VersionId>> resolved;
  for (const auto &ref : doc.references) {
    resolved.emplace(ref.ref_id, ResolveReference(ref, registry));
  }

  // Group anchors by (section order, paragraph) so each paragraph is
  // segmented once.
  std::map<std::string, std::size_t> section_order;
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    section_order.emplace(doc.sections[i].section_id, i);
  }
  using SentenceKey = std::tuple<std::size_t, std::int64_t, std::size_t>;
  // (section order, paragraph, sentence begin) -> versions, in registry order
  std::map<SentenceKey, std::set<std::size_t>> hits;
  std::map<SentenceKey, SentenceSpan> spans_by_key;
  std::map<std::pair<std::size_t, std::int64_t>, std::vector<SentenceSpan>>
      segment_cache;

  for (const auto &anchor : doc.anchors) {
    std::set<std::size_t> versions;
    for (const auto &ref_id : anchor.ref_ids) {
      auto it = resolved.find(ref_id);
      if (it == resolved.end() || !it->second) continue;
      if (auto idx = registry.IndexOf(*it->second)) versions.insert(*idx);
    }
    if (versions.empty()) {
      ++result.skipped_anchors;
      continue;
    }
    auto sec = section_order.find(anchor.section_id);
    if (sec == section_order.end()) {
      ++result.skipped_anchors;
      continue;
    }
    const SectionNode &section = doc.sections[sec->second];
    if (anchor.paragraph_index < 0 ||
        anchor.paragraph_index >=
            static_cast<std::int64_t>(section.paragraphs.size())) {
      ++result.skipped_anchors;
      continue;
    }
    const auto cache_key = std::make_pair(sec->second, anchor.paragraph_index);
    auto cached = segment_cache.find(cache_key);
    if (cached == segment_cache.end()) {
      cached = segment_cache
                   .emplace(cache_key,
                            SegmentSentences(
                                section
                                    .paragraphs[static_cast<std::size_t>(
                                        anchor.paragraph_index)]
                                    .text))
                   .first;
    }
    const auto &spans = cached->second;
    if (spans.empty()) {
      ++result.skipped_anchors;
      continue;
    }
    // Last sentence starting at or before the anchor start.
    const auto start = static_cast<std::size_t>(std::max<std::int64_t>(
        anchor.char_start, 0));
    auto host = std::upper_bound(
        spans.begin(), spans.end(), start,
        [](std::size_t pos, const SentenceSpan &s) { return pos < s.begin; });
    if (host != spans.begin()) --host;
    const SentenceKey key{sec->second, anchor.paragraph_index, host->begin};
    hits[key].insert(versions.begin(), versions.end());
    spans_by_key.emplace(key, *host);
  }

  for (const auto &[key, version_indices] : hits) {
    const auto &[sec_idx, para_idx, begin] = key;
    const SectionNode &section = doc.sections[sec_idx];
    const Paragraph &para =
        section.paragraphs[static_cast<std::size_t>(para_idx)];
    const SentenceSpan span = spans_by_key.at(key);

    std::optional<std::vector<std::string>> tags;
    if (para.token_tags) {
      const auto tokens = TokenizeWithOffsets(para.text);
      if (tokens.size() == para.token_tags->size()) {
        std::vector<std::string> slice;
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          if (tokens[t].begin >= span.begin && tokens[t].end <= span.end) {
            slice.push_back((*para.token_tags)[t]);
          }
        }
        tags = std::move(slice);
      }
    }

    auto kind_it = kinds.find(section.section_id);
    const SectionKind kind = kind_it == kinds.end() ? SectionKind::kNonMethod
                                                    : kind_it->second;
    for (std::size_t v : version_indices) {
      const VersionEntry &entry = registry.entries()[v];
      Citance c;
      c.doc_id = doc.doc_id;
      c.sentence.text = para.text.substr(span.begin, span.end - span.begin);
      c.sentence.char_start = span.begin;
      c.sentence.char_end = span.end;
      c.sentence.section_id = section.section_id;
      c.sentence.paragraph_index = para_idx;
      c.version_id = entry.version_id;
      c.section_kind = kind;
      c.citing_year = doc.publication_year;
      const ObjectHistory h =
          ComputeObjectHistory(entry.version_id, doc.publication_year, registry);
      c.object_history_years = h.years;
      c.history_flagged = h.flagged;
      c.token_tags = tags;
      result.citances.push_back(std::move(c));
    }
  }
  return result;
}

CitanceCounts CitancesPerPaper(std::span<const Citance> citances) {
  CitanceCounts counts;
  for (const auto &c : citances) {
    if (c.doc_id != citances.front().doc_id) {
      throw Error(ErrorCode::kMixedDocuments,
                  citances.front().doc_id + " vs " + c.doc_id);
    }
    ++counts.total;
    if (c.section_kind == SectionKind::kMethod) {
      ++counts.method;
    } else {
      ++counts.non_method;
    }
  }
  return counts;
}

}  // namespace citectx
