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

#include "citectx/corpus.h"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "citectx/error.h"
#include "citectx/tagset.h"
#include "citectx/tokenizer.h"
#include "json.hpp"

namespace citectx {
namespace {

using json = nlohmann::json;

const json &Require(const json &obj, const char *key, const std::string &ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kMissingField, ctx + "." + key);
  }
  return *it;
}

std::string RequireString(const json &obj, const char *key,
                          const std::string &ctx) {
  const json &v = Require(obj, key, ctx);
  if (!v.is_string()) {
    throw Error(ErrorCode::kMalformedRecord,
                ctx + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::int64_t RequireInt(const json &obj, const char *key,
                        const std::string &ctx) {
  const json &v = Require(obj, key, ctx);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kMalformedRecord,
                ctx + "." + key + " must be an integer");
  }
  return v.get<std::int64_t>();
}

const json &RequireArray(const json &obj, const char *key,
                         const std::string &ctx) {
  const json &v = Require(obj, key, ctx);
  if (!v.is_array()) {
    throw Error(ErrorCode::kMalformedRecord,
                ctx + "." + key + " must be an array");
  }
  return v;
}

std::vector<std::string> StringArray(const json &arr, const std::string &ctx) {
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const auto &v : arr) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kMalformedRecord, ctx + " must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

void RequireObject(const json &v, const std::string &ctx) {
  if (!v.is_object()) {
    throw Error(ErrorCode::kMalformedRecord, ctx + " must be an object");
  }
}

Paragraph ParseParagraph(const json &v, const std::string &ctx) {
  Paragraph p;
  if (v.is_string()) {
    p.text = v.get<std::string>();
    return p;
  }
  RequireObject(v, ctx);
  p.text = RequireString(v, "text", ctx);
  if (auto it = v.find("token_tags"); it != v.end() && !it->is_null()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::kMalformedRecord,
                  ctx + ".token_tags must be an array");
    }
    p.token_tags = StringArray(*it, ctx + ".token_tags");
  }
  return p;
}

}  // namespace

const SectionNode *Document::FindSection(std::string_view section_id) const {
  for (const auto &s : sections) {
    if (s.section_id == section_id) return &s;
  }
  return nullptr;
}

const ReferenceEntry *Document::FindReference(std::string_view ref_id) const {
  for (const auto &r : references) {
    if (r.ref_id == ref_id) return &r;
  }
  return nullptr;
}

Document ParseDocumentRecord(std::string_view line) {
  json root;
  try {
    root = json::parse(line);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kMalformedRecord, e.what());
  }
  RequireObject(root, "record");

  Document doc;
  const std::string ctx = "record";
  doc.doc_id = RequireString(root, "doc_id", ctx);
  const std::int64_t year = RequireInt(root, "publication_year", ctx);
  doc.publication_year = static_cast<int>(year);
  doc.journal_id = RequireString(root, "journal_id", ctx);

  const json &sections = RequireArray(root, "sections", ctx);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const std::string sctx = "sections[" + std::to_string(i) + "]";
    const json &s = sections[i];
    RequireObject(s, sctx);
    SectionNode node;
    node.section_id = RequireString(s, "section_id", sctx);
    node.title = RequireString(s, "title", sctx);
    const json &parent = Require(s, "parent_id", sctx);
    if (parent.is_string()) {
      node.parent_id = parent.get<std::string>();
    } else if (!parent.is_null()) {
      throw Error(ErrorCode::kMalformedRecord,
                  sctx + ".parent_id must be a string or null");
    }
    const json &paras = RequireArray(s, "paragraphs", sctx);
    for (std::size_t j = 0; j < paras.size(); ++j) {
      node.paragraphs.push_back(
          ParseParagraph(paras[j], sctx + ".paragraphs[" + std::to_string(j) +
                                       "]"));
    }
    doc.sections.push_back(std::move(node));
  }

  const json &refs = RequireArray(root, "references", ctx);
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::string rctx = "references[" + std::to_string(i) + "]";
    const json &r = refs[i];
    RequireObject(r, rctx);
    ReferenceEntry entry;
    entry.ref_id = RequireString(r, "ref_id", rctx);
    entry.lead_contributor = RequireString(r, "lead_contributor", rctx);
    entry.year = static_cast<int>(RequireInt(r, "year", rctx));
    entry.title = RequireString(r, "title", rctx);
    doc.references.push_back(std::move(entry));
  }

  const json &anchors = RequireArray(root, "anchors", ctx);
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const std::string actx = "anchors[" + std::to_string(i) + "]";
    const json &a = anchors[i];
    RequireObject(a, actx);
    CitationAnchor anchor;
    anchor.section_id = RequireString(a, "section_id", actx);
    anchor.paragraph_index = RequireInt(a, "paragraph_index", actx);
    anchor.char_start = RequireInt(a, "char_start", actx);
    anchor.char_end = RequireInt(a, "char_end", actx);
    anchor.ref_ids =
        StringArray(RequireArray(a, "ref_ids", actx), actx + ".ref_ids");
    doc.anchors.push_back(std::move(anchor));
  }
  return doc;
}

std::string SerializeDocument(const Document &doc) {
  json root;
  root["doc_id"] = doc.doc_id;
  root["publication_year"] = doc.publication_year;
  root["journal_id"] = doc.journal_id;
  json sections = json::array();
  for (const auto &s : doc.sections) {
    json paras = json::array();
    for (const auto &p : s.paragraphs) {
      if (p.token_tags) {
        paras.push_back({{"text", p.text}, {"token_tags", *p.token_tags}});
      } else {
        paras.push_back(p.text);
      }
    }
    sections.push_back({{"section_id", s.section_id},
                        {"title", s.title},
                        {"parent_id", s.parent_id ? json(*s.parent_id)
                                                  : json(nullptr)},
                        {"paragraphs", std::move(paras)}});
  }
  root["sections"] = std::move(sections);
  json refs = json::array();
  for (const auto &r : doc.references) {
    refs.push_back({{"ref_id", r.ref_id},
                    {"lead_contributor", r.lead_contributor},
                    {"year", r.year},
                    {"title", r.title}});
  }
  root["references"] = std::move(refs);
  json anchors = json::array();
  for (const auto &a : doc.anchors) {
    anchors.push_back({{"section_id", a.section_id},
                       {"paragraph_index", a.paragraph_index},
                       {"char_start", a.char_start},
                       {"char_end", a.char_end},
                       {"ref_ids", a.ref_ids}});
  }
  root["anchors"] = std::move(anchors);
  return root.dump();
}

ValidationReport ValidateDocument(const Document &doc) {
  ValidationReport report;
  auto add = [&report](std::string code, std::string loc, std::string detail) {
    report.push_back({std::move(code), std::move(loc), std::move(detail)});
  };

  if (doc.doc_id.empty()) add("EMPTY_DOC_ID", "doc_id", "doc_id is empty");

  std::unordered_map<std::string, std::size_t> section_index;
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    const auto &s = doc.sections[i];
    if (!section_index.emplace(s.section_id, i).second) {
      add("DUPLICATE_SECTION_ID", "sections[" + std::to_string(i) + "]",
          s.section_id);
    }
  }

  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    const auto &s = doc.sections[i];
    if (!s.parent_id) continue;
    const std::string loc = "sections[" + std::to_string(i) + "]";
    auto it = section_index.find(*s.parent_id);
    if (it == section_index.end()) {
      add("UNKNOWN_PARENT", loc, *s.parent_id);
      continue;
    }
    if (it->second < i) continue;
    // Parent is this section or a later one: either a loop or a forward
    // reference.
    bool cyclic = false;
    std::set<std::size_t> seen{i};
    std::size_t cur = it->second;
    while (true) {
      if (seen.count(cur)) {
        cyclic = cur == i;
        break;
      }
      seen.insert(cur);
      const auto &p = doc.sections[cur].parent_id;
      if (!p) break;
      auto next = section_index.find(*p);
      if (next == section_index.end()) break;
      cur = next->second;
    }
    add(cyclic ? "CYCLIC_SECTION" : "PARENT_NOT_EARLIER", loc, *s.parent_id);
  }

  std::unordered_set<std::string> ref_ids;
  for (std::size_t i = 0; i < doc.references.size(); ++i) {
    if (!ref_ids.insert(doc.references[i].ref_id).second) {
      add("DUPLICATE_REFERENCE_ID", "references[" + std::to_string(i) + "]",
          doc.references[i].ref_id);
    }
  }

  for (std::size_t i = 0; i < doc.anchors.size(); ++i) {
    const auto &a = doc.anchors[i];
    const std::string loc = "anchors[" + std::to_string(i) + "]";
    if (a.ref_ids.empty()) add("EMPTY_ANCHOR_REFS", loc, "no ref_ids");
    for (const auto &r : a.ref_ids) {
      if (!ref_ids.count(r)) add("UNKNOWN_ANCHOR_REFERENCE", loc, r);
    }
    if (a.char_start < 0 || a.char_end <= a.char_start) {
      add("INVALID_ANCHOR_SPAN", loc,
          std::to_string(a.char_start) + ".." + std::to_string(a.char_end));
    }
    auto it = section_index.find(a.section_id);
    if (it == section_index.end()) {
      add("UNKNOWN_ANCHOR_SECTION", loc, a.section_id);
      continue;
    }
    const auto &paras = doc.sections[it->second].paragraphs;
    if (a.paragraph_index < 0 ||
        a.paragraph_index >= static_cast<std::int64_t>(paras.size())) {
      add("PARAGRAPH_INDEX_OUT_OF_RANGE", loc,
          std::to_string(a.paragraph_index));
      continue;
    }
    const auto len = static_cast<std::int64_t>(
        paras[static_cast<std::size_t>(a.paragraph_index)].text.size());
    if (a.char_start >= 0 && a.char_end > a.char_start && a.char_end > len) {
      add("OUT_OF_RANGE_ANCHOR", loc,
          "char_end " + std::to_string(a.char_end) + " > paragraph length " +
              std::to_string(len));
    }
  }

  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    const auto &paras = doc.sections[i].paragraphs;
    for (std::size_t j = 0; j < paras.size(); ++j) {
      if (!paras[j].token_tags) continue;
      const std::string loc = "sections[" + std::to_string(i) +
                              "].paragraphs[" + std::to_string(j) + "]";
      const auto &tags = *paras[j].token_tags;
      const std::size_t n_tokens = TokenizeWithOffsets(paras[j].text).size();
      if (tags.size() != n_tokens) {
        add("TOKEN_TAG_COUNT_MISMATCH", loc,
            std::to_string(tags.size()) + " tags for " +
                std::to_string(n_tokens) + " tokens");
      }
      for (const auto &t : tags) {
        if (!IsKnownTag(t)) {
          add("UNKNOWN_TAG", loc, t);
          break;
        }
      }
    }
  }
  return report;
}

std::vector<FlatSection> FlattenSections(const Document &doc) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    index.emplace(doc.sections[i].section_id, i);
  }
  std::vector<FlatSection> out;
  out.reserve(doc.sections.size());
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    std::vector<std::string> chain;
    std::vector<bool> visited(doc.sections.size(), false);
    visited[i] = true;
    std::size_t cur = i;
    while (doc.sections[cur].parent_id) {
      auto it = index.find(*doc.sections[cur].parent_id);
      if (it == index.end()) break;
      if (visited[it->second]) {
        throw Error(ErrorCode::kCyclicSectionTree,
                    "section " + doc.sections[i].section_id);
      }
      visited[it->second] = true;
      cur = it->second;
      chain.push_back(doc.sections[cur].section_id);
    }
    std::vector<std::string> ancestors(chain.rbegin(), chain.rend());
    out.push_back({&doc.sections[i], static_cast<int>(ancestors.size()),
                   std::move(ancestors)});
  }
  return out;
}

}  // namespace citectx
